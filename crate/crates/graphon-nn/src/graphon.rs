//! Graphons, the deterministic graphs sampled from them, and the induced
//! step-graphon lift of a finite graph.
//!
//! The sampling convention is fixed to left endpoints `u_i = (i-1)/n`
//! everywhere: it is what makes the induced partition `I_i = [(i-1)/n, i/n)`
//! line up in the approximation bounds, and it makes
//! `induce_graphon(sample_graph(W_step, n))` a bit-exact round trip when the
//! step grid is the sampling grid.

use std::fmt::Write as _;
use std::sync::Arc;

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::quad;
use crate::signal::{read_vector_text, StepSignal};

/// How a shift operator scales its adjacency matrix when applied.
///
/// `AdjacencyOverN` divides by the node count; the eigenvalues of `S/n` equal
/// the eigenvalues of the induced step graphon's integral operator, which puts
/// graph and graphon filters on the same spectral axis in `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    Adjacency,
    AdjacencyOverN,
}

impl Normalization {
    pub fn label(&self) -> &'static str {
        match self {
            Normalization::Adjacency => "adjacency",
            Normalization::AdjacencyOverN => "adjacency-over-n",
        }
    }
}

/// Dense symmetric graph shift operator (here: the weighted adjacency matrix).
#[derive(Debug, Clone)]
pub struct ShiftOperator {
    matrix: Array2<f64>,
    normalization: Normalization,
}

pub const SYMMETRY_TOL: f64 = 1e-12;

impl ShiftOperator {
    pub fn new(matrix: Array2<f64>, normalization: Normalization) -> Result<Self> {
        let (r, c) = matrix.dim();
        if r != c || r == 0 {
            return Err(Error::DimensionMismatch(format!("shift operator must be square and nonempty, got {r}x{c}")));
        }
        if !matrix.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("shift operator entries"));
        }
        let mut max_abs = 0.0f64;
        for i in 0..r {
            for j in (i + 1)..r {
                max_abs = max_abs.max((matrix[(i, j)] - matrix[(j, i)]).abs());
            }
        }
        if max_abs > SYMMETRY_TOL {
            return Err(Error::Asymmetric { max_abs, tol: SYMMETRY_TOL });
        }
        Ok(Self { matrix, normalization })
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    /// Raw adjacency entries, unscaled.
    pub fn matrix(&self) -> &Array2<f64> {
        &self.matrix
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn with_normalization(mut self, normalization: Normalization) -> Self {
        self.normalization = normalization;
        self
    }

    /// Scale factor applied to the adjacency when the operator acts.
    pub fn scale(&self) -> f64 {
        match self.normalization {
            Normalization::Adjacency => 1.0,
            Normalization::AdjacencyOverN => 1.0 / self.n() as f64,
        }
    }

    /// One shift: `S x` under the declared normalization.
    pub fn apply(&self, x: &Array1<f64>) -> Result<Array1<f64>> {
        if x.len() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "signal length {} vs operator size {}",
                x.len(),
                self.n()
            )));
        }
        Ok(self.matrix.dot(x) * self.scale())
    }

    /// Batched shift over column-stacked signals.
    pub(crate) fn apply_mat(&self, x: &Array2<f64>) -> Array2<f64> {
        self.matrix.dot(x) * self.scale()
    }
}

/// Closed-form nonzero eigenvalues of a graphon's integral operator, when the
/// family has them. Positive values descending, negative by descending
/// magnitude. Used as test oracles and for spectra CSV reference columns.
#[derive(Debug, Clone, Default)]
pub struct ClosedFormSpectrum {
    pub pos: Vec<f64>,
    pub neg: Vec<f64>,
}

#[derive(Clone)]
enum Kernel {
    /// W(u, v) = u v. Rank one, eigenvalue 1/3.
    Product,
    /// W(u, v) = exp(-(u - v)^2). Smooth, positive semidefinite.
    GaussianDiff,
    /// W(u, v) = min(u, v). Lipschitz with a kink on the diagonal; the
    /// Brownian-motion covariance kernel, eigenvalues 4 / ((2k-1) pi)^2.
    MinKernel,
    /// W(u, v) = 1/2 + 9/20 cos(2 pi (u + v)). Sign-indefinite rank-3 kernel.
    CosineRipple,
    Constant(f64),
    /// Balanced stochastic block model kernel: `p_in` on the diagonal blocks,
    /// `p_out` off. Not Lipschitz (jumps at block boundaries).
    Sbm { blocks: usize, p_in: f64, p_out: f64 },
    /// Piecewise constant on the uniform n-grid.
    Step(Arc<Array2<f64>>),
    Custom {
        f: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
        lipschitz_a1: Option<f64>,
        label: String,
    },
}

/// Bounded symmetric measurable kernel on `[0,1]^2`, the generating model for
/// deterministic graphs.
#[derive(Clone)]
pub struct Graphon {
    kernel: Kernel,
}

impl std::fmt::Debug for Graphon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graphon({})", self.label())
    }
}

impl Graphon {
    pub fn product() -> Self {
        Self { kernel: Kernel::Product }
    }

    pub fn gaussian_diff() -> Self {
        Self { kernel: Kernel::GaussianDiff }
    }

    pub fn min_kernel() -> Self {
        Self { kernel: Kernel::MinKernel }
    }

    pub fn cosine_ripple() -> Self {
        Self { kernel: Kernel::CosineRipple }
    }

    pub fn constant(c: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&c) {
            return Err(Error::InvalidArgument(format!("constant graphon value {c} outside [0,1]")));
        }
        Ok(Self { kernel: Kernel::Constant(c) })
    }

    pub fn sbm(blocks: usize, p_in: f64, p_out: f64) -> Result<Self> {
        if blocks == 0 {
            return Err(Error::InvalidArgument("SBM needs at least one block".into()));
        }
        for p in [p_in, p_out] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidArgument(format!("SBM probability {p} outside [0,1]")));
            }
        }
        Ok(Self { kernel: Kernel::Sbm { blocks, p_in, p_out } })
    }

    pub fn step(matrix: Array2<f64>) -> Result<Self> {
        let (r, c) = matrix.dim();
        if r != c || r == 0 {
            return Err(Error::DimensionMismatch(format!("step graphon matrix must be square, got {r}x{c}")));
        }
        let mut max_abs = 0.0f64;
        for i in 0..r {
            for j in (i + 1)..r {
                max_abs = max_abs.max((matrix[(i, j)] - matrix[(j, i)]).abs());
            }
        }
        if max_abs > SYMMETRY_TOL {
            return Err(Error::Asymmetric { max_abs, tol: SYMMETRY_TOL });
        }
        if !matrix.iter().all(|v| v.is_finite() && (-1e-12..=1.0 + 1e-12).contains(v)) {
            return Err(Error::InvalidArgument("step graphon entries must lie in [0,1]".into()));
        }
        Ok(Self { kernel: Kernel::Step(Arc::new(matrix)) })
    }

    /// User-supplied kernel. Symmetry and boundedness are probed on a dense
    /// grid before acceptance; `lipschitz_a1`, if given, is probed too.
    pub fn custom<F>(f: F, lipschitz_a1: Option<f64>, label: &str) -> Result<Self>
    where
        F: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        let g = Self {
            kernel: Kernel::Custom { f: Arc::new(f), lipschitz_a1, label: label.to_string() },
        };
        g.validate_on_grid(128)?;
        Ok(g)
    }

    /// The smooth Lipschitz kernels with known A1, used by every bound check.
    pub fn smooth_family() -> Vec<Graphon> {
        vec![Self::product(), Self::gaussian_diff(), Self::min_kernel(), Self::cosine_ripple()]
    }

    pub fn label(&self) -> String {
        match &self.kernel {
            Kernel::Product => "product".into(),
            Kernel::GaussianDiff => "gaussian-diff".into(),
            Kernel::MinKernel => "min".into(),
            Kernel::CosineRipple => "cosine-ripple".into(),
            Kernel::Constant(c) => format!("constant({c})"),
            Kernel::Sbm { blocks, p_in, p_out } => format!("sbm({blocks},{p_in},{p_out})"),
            Kernel::Step(m) => format!("step({})", m.nrows()),
            Kernel::Custom { label, .. } => label.clone(),
        }
    }

    pub fn eval(&self, u: f64, v: f64) -> f64 {
        match &self.kernel {
            Kernel::Product => u * v,
            Kernel::GaussianDiff => (-(u - v) * (u - v)).exp(),
            Kernel::MinKernel => u.min(v),
            Kernel::CosineRipple => 0.5 + 0.45 * (2.0 * std::f64::consts::PI * (u + v)).cos(),
            Kernel::Constant(c) => *c,
            Kernel::Sbm { blocks, p_in, p_out } => {
                let k = *blocks as f64;
                let bu = ((u * k).floor() as usize).min(blocks - 1);
                let bv = ((v * k).floor() as usize).min(blocks - 1);
                if bu == bv {
                    *p_in
                } else {
                    *p_out
                }
            }
            Kernel::Step(m) => {
                let n = m.nrows();
                let i = ((u * n as f64).floor() as usize).min(n - 1);
                let j = ((v * n as f64).floor() as usize).min(n - 1);
                m[(i, j)]
            }
            Kernel::Custom { f, .. } => f(u, v),
        }
    }

    /// Analytic Lipschitz constant A1 in the metric `|du| + |dv|`, when the
    /// family has one. SBM and step graphons have jumps and report `None`.
    pub fn lipschitz_a1(&self) -> Option<f64> {
        match &self.kernel {
            Kernel::Product => Some(1.0),
            // sup_t |d/dt exp(-t^2)| = sqrt(2) exp(-1/2)
            Kernel::GaussianDiff => Some(std::f64::consts::SQRT_2 * (-0.5f64).exp()),
            Kernel::MinKernel => Some(1.0),
            Kernel::CosineRipple => Some(0.9 * std::f64::consts::PI),
            Kernel::Constant(_) => Some(0.0),
            Kernel::Sbm { .. } | Kernel::Step(_) => None,
            Kernel::Custom { lipschitz_a1, .. } => *lipschitz_a1,
        }
    }

    /// Exact nonzero spectrum of the integral operator, for families where it
    /// is known in closed form. `MinKernel` truncates at |lambda| >= 1e-9.
    pub fn closed_form_spectrum(&self) -> Option<ClosedFormSpectrum> {
        match &self.kernel {
            Kernel::Product => Some(ClosedFormSpectrum { pos: vec![1.0 / 3.0], neg: vec![] }),
            Kernel::Constant(c) => Some(ClosedFormSpectrum {
                pos: if *c > 0.0 { vec![*c] } else { vec![] },
                neg: vec![],
            }),
            Kernel::MinKernel => {
                let mut pos = Vec::new();
                let mut k = 1u32;
                loop {
                    let lam = 4.0 / (((2 * k - 1) as f64) * std::f64::consts::PI).powi(2);
                    if lam < 1e-9 {
                        break;
                    }
                    pos.push(lam);
                    k += 1;
                }
                Some(ClosedFormSpectrum { pos, neg: vec![] })
            }
            Kernel::CosineRipple => {
                Some(ClosedFormSpectrum { pos: vec![0.5, 0.225], neg: vec![-0.225] })
            }
            Kernel::Sbm { blocks, p_in, p_out } => {
                let k = *blocks as f64;
                let lead = (p_in + (k - 1.0) * p_out) / k;
                let mut pos = vec![lead];
                let rest = (p_in - p_out) / k;
                for _ in 1..*blocks {
                    if rest > 0.0 {
                        pos.push(rest);
                    }
                }
                let mut neg = Vec::new();
                if rest < 0.0 {
                    for _ in 1..*blocks {
                        neg.push(rest);
                    }
                }
                pos.sort_by(|a, b| b.partial_cmp(a).unwrap());
                Some(ClosedFormSpectrum { pos, neg })
            }
            _ => None,
        }
    }

    /// Whether the kernel is piecewise constant, and on which grid.
    pub fn as_step(&self) -> Option<&Array2<f64>> {
        match &self.kernel {
            Kernel::Step(m) => Some(m),
            _ => None,
        }
    }

    /// Step-matrix representation when one is exact: step kernels themselves
    /// and balanced SBMs (constant on the uniform `blocks`-grid).
    pub fn exact_step_matrix(&self) -> Option<Array2<f64>> {
        match &self.kernel {
            Kernel::Step(m) => Some((**m).clone()),
            Kernel::Sbm { blocks, p_in, p_out } => Some(Array2::from_shape_fn(
                (*blocks, *blocks),
                |(i, j)| if i == j { *p_in } else { *p_out },
            )),
            Kernel::Constant(c) => Some(Array2::from_elem((1, 1), *c)),
            _ => None,
        }
    }

    /// Axis-aligned discontinuity breakpoints, used to split quadrature cells.
    fn axis_breakpoints(&self) -> Vec<f64> {
        match &self.kernel {
            Kernel::Step(m) => quad::uniform_breakpoints(m.nrows()),
            Kernel::Sbm { blocks, .. } => quad::uniform_breakpoints(*blocks),
            _ => Vec::new(),
        }
    }

    /// Kernels with a kink or jump across `u = v` need subdivided quadrature
    /// on diagonal cells.
    fn has_diagonal_kink(&self) -> bool {
        matches!(&self.kernel, Kernel::MinKernel | Kernel::Custom { .. })
    }

    /// Probe symmetry, boundedness and (if declared) the Lipschitz bound on an
    /// `m x m` grid.
    pub fn validate_on_grid(&self, m: usize) -> Result<()> {
        let h = 1.0 / (m - 1) as f64;
        for a in 0..m {
            for b in a..m {
                let (u, v) = (a as f64 * h, b as f64 * h);
                let w = self.eval(u, v);
                if !w.is_finite() {
                    return Err(Error::NonFinite("graphon kernel"));
                }
                if !(-1e-12..=1.0 + 1e-12).contains(&w) {
                    return Err(Error::InvalidArgument(format!(
                        "kernel value {w} at ({u}, {v}) outside [0,1]"
                    )));
                }
                if (w - self.eval(v, u)).abs() > SYMMETRY_TOL {
                    return Err(Error::Asymmetric { max_abs: (w - self.eval(v, u)).abs(), tol: SYMMETRY_TOL });
                }
            }
        }
        if let Some(a1) = self.lipschitz_a1() {
            for a in 0..m - 1 {
                for b in 0..m {
                    let (u, v) = (a as f64 * h, b as f64 * h);
                    let d1 = (self.eval(u + h, v) - self.eval(u, v)).abs();
                    let d2 = (self.eval(v, u + h) - self.eval(v, u)).abs();
                    if d1.max(d2) > a1 * h + 1e-9 {
                        return Err(Error::InvalidArgument(format!(
                            "kernel violates declared Lipschitz constant {a1} near ({u}, {v})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Evaluate the graphon at the regular grid `u_i = (i-1)/n`, producing the
/// adjacency of the deterministic graph `G_n`. The kernel is evaluated once
/// per unordered pair, so the result is exactly symmetric.
pub fn sample_graph(w: &Graphon, n: usize) -> Result<ShiftOperator> {
    if n == 0 {
        return Err(Error::InvalidArgument("sample_graph: n must be >= 1".into()));
    }
    let mut m = Array2::zeros((n, n));
    for i in 0..n {
        let ui = i as f64 / n as f64;
        for j in i..n {
            let uj = j as f64 / n as f64;
            let w_ij = w.eval(ui, uj);
            m[(i, j)] = w_ij;
            m[(j, i)] = w_ij;
        }
    }
    ShiftOperator::new(m, Normalization::Adjacency)
}

/// Step graphon `W_n` induced by a graph: `W_n = [S]_ij` on `I_i x I_j`.
pub fn induce_graphon(s: &ShiftOperator) -> Graphon {
    Graphon { kernel: Kernel::Step(Arc::new(s.matrix().clone())) }
}

/// L2([0,1]^2) distance between two graphons.
///
/// Two step kernels integrate exactly on the merged partition. Otherwise the
/// squared difference is integrated cellwise with Gauss-Legendre panels
/// (absolute tolerance well under 1e-8 for the built-in families); cells
/// crossing the diagonal of a kinked kernel are subdivided first.
pub fn graphon_l2_distance(w1: &Graphon, w2: &Graphon) -> Result<f64> {
    if let (Some(a), Some(b)) = (step_matrix_for_distance(w1), step_matrix_for_distance(w2)) {
        return Ok(step_step_distance(&a, &b));
    }

    let mut breaks: Vec<f64> = w1
        .axis_breakpoints()
        .into_iter()
        .chain(w2.axis_breakpoints())
        .collect();
    breaks.sort_by(|x, y| x.partial_cmp(y).unwrap());
    breaks.dedup();
    let mut edges = vec![0.0];
    edges.extend(breaks.iter().copied());
    edges.push(1.0);
    // Refine so no cell is wider than 1/64.
    let edges = refine_edges(&edges, 64);

    let kinked = w1.has_diagonal_kink() || w2.has_diagonal_kink();
    let mut sum = 0.0;
    for a in edges.windows(2) {
        for b in edges.windows(2) {
            let crosses_diag = a[0] < b[1] && b[0] < a[1];
            let f = |u: f64, v: f64| {
                let d = w1.eval(u, v) - w2.eval(u, v);
                d * d
            };
            sum += if kinked && crosses_diag {
                gauss2d_subdivided(&f, a[0], a[1], b[0], b[1], 16)
            } else {
                gauss2d(&f, a[0], a[1], b[0], b[1])
            };
        }
    }
    if !sum.is_finite() {
        return Err(Error::NonFinite("graphon_l2_distance"));
    }
    Ok(sum.max(0.0).sqrt())
}

fn step_matrix_for_distance(w: &Graphon) -> Option<Array2<f64>> {
    w.exact_step_matrix()
}

/// Exact L2 distance between two step kernels on the merged 2-D partition.
fn step_step_distance(a: &Array2<f64>, b: &Array2<f64>) -> f64 {
    let (n1, n2) = (a.nrows() as u64, b.nrows() as u64);
    // merged 1-D cells: (length, index into a, index into b)
    let mut cells = Vec::new();
    let (mut i, mut j) = (0u64, 0u64);
    let mut lo = 0.0f64;
    while i < n1 && j < n2 {
        let lhs = (i + 1) * n2;
        let rhs = (j + 1) * n1;
        let hi = if lhs <= rhs { (i + 1) as f64 / n1 as f64 } else { (j + 1) as f64 / n2 as f64 };
        cells.push((hi - lo, i as usize, j as usize));
        if lhs <= rhs {
            i += 1;
        }
        if rhs <= lhs {
            j += 1;
        }
        lo = hi;
    }
    let mut sum = 0.0;
    for &(len_u, ia, ib) in &cells {
        for &(len_v, ja, jb) in &cells {
            let d = a[(ia, ja)] - b[(ib, jb)];
            sum += d * d * len_u * len_v;
        }
    }
    sum.max(0.0).sqrt()
}

fn refine_edges(edges: &[f64], min_cells: usize) -> Vec<f64> {
    let h_max = 1.0 / min_cells as f64;
    let mut out = Vec::with_capacity(min_cells + edges.len());
    for w in edges.windows(2) {
        out.push(w[0]);
        let span = w[1] - w[0];
        let k = (span / h_max).ceil() as usize;
        for t in 1..k {
            out.push(w[0] + span * t as f64 / k as f64);
        }
    }
    out.push(1.0);
    out
}

// 12-point Gauss-Legendre nodes and weights on [-1, 1].
const GL12_X: [f64; 12] = [
    -0.981560634246719,
    -0.904117256370475,
    -0.769902674194305,
    -0.587317954286617,
    -0.367831498998180,
    -0.125233408511469,
    0.125233408511469,
    0.367831498998180,
    0.587317954286617,
    0.769902674194305,
    0.904117256370475,
    0.981560634246719,
];
const GL12_W: [f64; 12] = [
    0.047175336386512,
    0.106939325995318,
    0.160078328543346,
    0.203167426723066,
    0.233492536538355,
    0.249147045813403,
    0.249147045813403,
    0.233492536538355,
    0.203167426723066,
    0.160078328543346,
    0.106939325995318,
    0.047175336386512,
];

fn gauss2d<F: Fn(f64, f64) -> f64>(f: &F, a: f64, b: f64, c: f64, d: f64) -> f64 {
    let (su, cu) = (0.5 * (b - a), 0.5 * (a + b));
    let (sv, cv) = (0.5 * (d - c), 0.5 * (c + d));
    let mut sum = 0.0;
    for (xi, wi) in GL12_X.iter().zip(GL12_W) {
        let u = cu + su * xi;
        let mut inner = 0.0;
        for (xj, wj) in GL12_X.iter().zip(GL12_W) {
            inner += wj * f(u, cv + sv * xj);
        }
        sum += wi * inner;
    }
    sum * su * sv
}

fn gauss2d_subdivided<F: Fn(f64, f64) -> f64>(f: &F, a: f64, b: f64, c: f64, d: f64, k: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..k {
        let (a1, b1) = (a + (b - a) * p as f64 / k as f64, a + (b - a) * (p + 1) as f64 / k as f64);
        for q in 0..k {
            let (c1, d1) = (c + (d - c) * q as f64 / k as f64, c + (d - c) * (q + 1) as f64 / k as f64);
            sum += gauss2d(f, a1, b1, c1, d1);
        }
    }
    sum
}

/// Grid estimate of the Lipschitz constant: the max of `|dW| / h` over
/// adjacent pairs of an `m x m` grid. This is a lower bound on the true A1;
/// when a family provides an analytic constant, that value overrides this
/// estimate in every bound.
pub fn estimate_lipschitz(w: &Graphon, grid_m: usize) -> Result<f64> {
    if grid_m < 2 {
        return Err(Error::InvalidArgument("estimate_lipschitz: grid_m must be >= 2".into()));
    }
    let h = 1.0 / (grid_m - 1) as f64;
    let mut best = 0.0f64;
    for a in 0..grid_m {
        let u = a as f64 * h;
        for b in 0..grid_m {
            let v = b as f64 * h;
            if a + 1 < grid_m {
                best = best.max((w.eval(u + h, v) - w.eval(u, v)).abs() / h);
            }
            if b + 1 < grid_m {
                best = best.max((w.eval(u, v + h) - w.eval(u, v)).abs() / h);
            }
        }
    }
    Ok(best)
}

/// Serialize a step matrix to the plain-text format: first line `n`, then `n`
/// rows of space-separated values with 17 significant digits.
pub fn write_matrix_text(m: &Array2<f64>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", m.nrows());
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| format!("{:.16e}", m[(i, j)])).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}

pub fn read_matrix_text(text: &str) -> Result<Array2<f64>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse { context: "matrix".into(), message: "empty input".into() })?
        .trim()
        .parse()
        .map_err(|e| Error::Parse { context: "matrix".into(), message: format!("bad size line: {e}") })?;
    let mut m = Array2::zeros((n, n));
    for i in 0..n {
        let line = lines.next().ok_or_else(|| Error::Parse {
            context: "matrix".into(),
            message: format!("missing row {i}"),
        })?;
        let vals: Vec<f64> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<f64>().map_err(|e| Error::Parse {
                    context: "matrix".into(),
                    message: format!("bad value {t:?}: {e}"),
                })
            })
            .collect::<Result<_>>()?;
        if vals.len() != n {
            return Err(Error::Parse {
                context: "matrix".into(),
                message: format!("row {i} has {} values, expected {n}", vals.len()),
            });
        }
        for (j, v) in vals.into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    Ok(m)
}

/// Step signal induced on the same grid as a step graphon row; convenience for
/// pairing signals with induced graphons in tests.
pub fn step_signal_like(s: &ShiftOperator, values: Array1<f64>) -> Result<StepSignal> {
    if values.len() != s.n() {
        return Err(Error::DimensionMismatch(format!(
            "signal length {} vs operator size {}",
            values.len(),
            s.n()
        )));
    }
    StepSignal::new(values)
}

pub use crate::signal::write_vector_text;

/// Parse the vector text format into a graph signal.
pub fn read_graph_signal_text(text: &str) -> Result<Array1<f64>> {
    read_vector_text(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_product_n2() {
        let s = sample_graph(&Graphon::product(), 2).unwrap();
        let m = s.matrix();
        assert_eq!(m[(0, 0)], 0.0);
        assert_eq!(m[(0, 1)], 0.0);
        assert_eq!(m[(1, 0)], 0.0);
        assert_eq!(m[(1, 1)], 0.25);
    }

    #[test]
    fn sample_sbm_8_nodes() {
        let w = Graphon::sbm(2, 0.8, 0.2).unwrap();
        let s = sample_graph(&w, 8).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let expected = if (i < 4) == (j < 4) { 0.8 } else { 0.2 };
                assert_eq!(s.matrix()[(i, j)], expected);
            }
        }
    }

    #[test]
    fn sample_single_node() {
        let s = sample_graph(&Graphon::gaussian_diff(), 1).unwrap();
        assert_eq!(s.n(), 1);
        assert_eq!(s.matrix()[(0, 0)], 1.0); // W(0, 0)
    }

    #[test]
    fn sample_exact_symmetry() {
        // not just within tolerance: bit-equal across the diagonal
        let s = sample_graph(&Graphon::gaussian_diff(), 33).unwrap();
        for i in 0..33 {
            for j in 0..33 {
                assert_eq!(s.matrix()[(i, j)].to_bits(), s.matrix()[(j, i)].to_bits());
            }
        }
    }

    #[test]
    fn induce_round_trip_bit_exact() {
        let m = Array2::from_shape_fn((5, 5), |(i, j)| ((i * j) as f64 * 0.04).min(1.0));
        let m = &m + &m.t().to_owned();
        let m = m / 2.0;
        let w = Graphon::step(m.clone()).unwrap();
        let s = sample_graph(&w, 5).unwrap();
        let w2 = induce_graphon(&s);
        assert_eq!(w2.as_step().unwrap(), &m);
    }

    #[test]
    fn induce_example_values() {
        let s = ShiftOperator::new(
            Array2::from_shape_vec((2, 2), vec![0.0, 0.0, 0.0, 0.25]).unwrap(),
            Normalization::Adjacency,
        )
        .unwrap();
        let w = induce_graphon(&s);
        assert_eq!(w.eval(0.2, 0.3), 0.0);
        assert_eq!(w.eval(0.7, 0.9), 0.25);
        assert_eq!(w.eval(0.2, 0.9), 0.0);
    }

    #[test]
    fn asymmetric_rejected() {
        let m = Array2::from_shape_vec((2, 2), vec![0.0, 0.5, 0.0, 0.0]).unwrap();
        assert!(ShiftOperator::new(m, Normalization::Adjacency).is_err());
    }

    #[test]
    fn constant_distance() {
        let a = Graphon::constant(0.9).unwrap();
        let b = Graphon::constant(0.4).unwrap();
        let d = graphon_l2_distance(&a, &b).unwrap();
        assert!((d - 0.5).abs() < 1e-12);
    }

    #[test]
    fn distance_to_self_zero() {
        let w = Graphon::gaussian_diff();
        assert!(graphon_l2_distance(&w, &w).unwrap() < 1e-9);
    }

    #[test]
    fn product_minus_induced_closed_form() {
        // || uv - W_n ||^2 = 1/9 - 2 s2^2 + s1^2 with s1 = sum u_i^2 / n,
        // s2 = sum of cell integrals of u; both sides rank-one so the 2-D
        // integral factorizes.
        let n = 8;
        let w = Graphon::product();
        let s = sample_graph(&w, n).unwrap();
        let wn = induce_graphon(&s);
        let d = graphon_l2_distance(&w, &wn).unwrap();

        let nf = n as f64;
        let s1: f64 = (0..n).map(|i| (i as f64 / nf).powi(2)).sum::<f64>() / nf;
        let s2: f64 = (0..n)
            .map(|i| {
                let (a, b) = (i as f64 / nf, (i + 1) as f64 / nf);
                (i as f64 / nf) * 0.5 * (b * b - a * a)
            })
            .sum::<f64>();
        let expected = (1.0f64 / 9.0 - 2.0 * s2 * s2 + s1 * s1).sqrt();
        assert!((d - expected).abs() < 1e-10, "d = {d}, expected = {expected}");
    }

    #[test]
    fn min_kernel_distance_matches_proposition_bound() {
        let w = Graphon::min_kernel();
        for n in [4usize, 16, 64] {
            let wn = induce_graphon(&sample_graph(&w, n).unwrap());
            let d = graphon_l2_distance(&w, &wn).unwrap();
            assert!(d <= (1.0 / n as f64).sqrt() + 1e-6, "n = {n}, d = {d}");
            assert!(d > 0.0);
        }
    }

    #[test]
    fn lipschitz_estimates() {
        let a1 = estimate_lipschitz(&Graphon::product(), 256).unwrap();
        assert!((a1 - 1.0).abs() < 2.0 / 256.0, "a1 = {a1}");
        assert_eq!(estimate_lipschitz(&Graphon::constant(0.3).unwrap(), 64).unwrap(), 0.0);
        // grid refinement stability for the gaussian kernel
        let e1 = estimate_lipschitz(&Graphon::gaussian_diff(), 128).unwrap();
        let e2 = estimate_lipschitz(&Graphon::gaussian_diff(), 256).unwrap();
        assert!((e2 - e1).abs() / e2 < 0.05);
        // and the estimate never exceeds the analytic constant
        assert!(e2 <= Graphon::gaussian_diff().lipschitz_a1().unwrap() + 1e-9);
    }

    #[test]
    fn matrix_text_round_trip() {
        let s = sample_graph(&Graphon::sbm(2, 0.8, 0.2).unwrap(), 4).unwrap();
        let text = write_matrix_text(s.matrix());
        let back = read_matrix_text(&text).unwrap();
        assert_eq!(s.matrix(), &back);
    }

    #[test]
    fn sbm_exact_step_matrix() {
        let w = Graphon::sbm(2, 0.8, 0.2).unwrap();
        let m = w.exact_step_matrix().unwrap();
        assert_eq!(m[(0, 0)], 0.8);
        assert_eq!(m[(0, 1)], 0.2);
        // distance between two SBMs differing in p: |dp| on diagonal blocks of
        // total measure 1/2
        let w2 = Graphon::sbm(2, 0.7, 0.2).unwrap();
        let d = graphon_l2_distance(&w, &w2).unwrap();
        assert!((d - 0.1 * 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn custom_kernel_validation() {
        assert!(Graphon::custom(|u, v| 0.5 + 0.4 * (u - v), None, "asym").is_err());
        assert!(Graphon::custom(|u, v| u + v, None, "unbounded").is_err());
        let ok = Graphon::custom(|u, v| 0.5 * u * v + 0.25, Some(0.5), "scaled-product");
        assert!(ok.is_ok());
    }
}
