//! Graphon signals on `[0,1]`, graph signals on `n` nodes, and the sampling /
//! induction maps between them.
//!
//! Step signals live on the uniform partition `I_i = [(i-1)/n, i/n)` (last
//! cell closed). L2 distances between two step signals are computed on the
//! merged partition of both grids, with integer breakpoint comparisons, so the
//! result carries no quadrature error.

use std::fmt::Write as _;
use std::sync::Arc;

use ndarray::Array1;

use crate::error::{Error, Result};
use crate::quad;

/// A signal on the nodes of a graph.
pub type GraphSignal = Array1<f64>;

/// Piecewise-constant function on the uniform n-cell partition of `[0,1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct StepSignal {
    values: Array1<f64>,
}

impl StepSignal {
    pub fn new(values: Array1<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("step signal needs at least one cell".into()));
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("step signal values"));
        }
        Ok(Self { values })
    }

    pub fn from_vec(values: Vec<f64>) -> Result<Self> {
        Self::new(Array1::from_vec(values))
    }

    /// Constant signal `c` on a single cell.
    pub fn constant(c: f64) -> Self {
        Self { values: Array1::from_elem(1, c) }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &Array1<f64> {
        &self.values
    }

    pub fn eval(&self, u: f64) -> f64 {
        let n = self.values.len();
        let i = ((u * n as f64).floor() as usize).min(n - 1);
        self.values[i]
    }

    /// Exact L2([0,1]) norm: sqrt(sum v_i^2 / n).
    pub fn l2_norm(&self) -> f64 {
        (self.values.iter().map(|v| v * v).sum::<f64>() / self.n() as f64).sqrt()
    }

    /// Refine onto the grid `factor * n` by value replication. Exact.
    pub fn refine(&self, factor: usize) -> StepSignal {
        let mut out = Vec::with_capacity(self.n() * factor);
        for &v in self.values.iter() {
            out.extend(std::iter::repeat(v).take(factor));
        }
        StepSignal { values: Array1::from_vec(out) }
    }
}

/// Evaluable signal on `[0,1]`, either analytic or piecewise constant.
#[derive(Clone)]
pub enum GraphonSignal {
    Analytic {
        f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
        /// Analytic Lipschitz constant, when the family provides one.
        lipschitz_a3: Option<f64>,
        label: String,
    },
    Step(StepSignal),
}

impl std::fmt::Debug for GraphonSignal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphonSignal::Analytic { label, lipschitz_a3, .. } => f
                .debug_struct("Analytic")
                .field("label", label)
                .field("lipschitz_a3", lipschitz_a3)
                .finish(),
            GraphonSignal::Step(s) => f.debug_struct("Step").field("n", &s.n()).finish(),
        }
    }
}

impl GraphonSignal {
    pub fn analytic<F>(f: F, lipschitz_a3: Option<f64>, label: &str) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        GraphonSignal::Analytic { f: Arc::new(f), lipschitz_a3, label: label.to_string() }
    }

    /// X(u) = u, with A3 = 1.
    pub fn linear() -> Self {
        Self::analytic(|u| u, Some(1.0), "linear")
    }

    /// X(u) = sin(2 pi u), with A3 = 2 pi.
    pub fn sine() -> Self {
        Self::analytic(|u| (2.0 * std::f64::consts::PI * u).sin(), Some(2.0 * std::f64::consts::PI), "sine")
    }

    pub fn constant(c: f64) -> Self {
        Self::analytic(move |_| c, Some(0.0), "constant")
    }

    pub fn step(values: Vec<f64>) -> Result<Self> {
        Ok(GraphonSignal::Step(StepSignal::from_vec(values)?))
    }

    pub fn eval(&self, u: f64) -> f64 {
        match self {
            GraphonSignal::Analytic { f, .. } => f(u),
            GraphonSignal::Step(s) => s.eval(u),
        }
    }

    /// A3 when known analytically. Step signals are not Lipschitz as functions
    /// on `[0,1]` (jumps), so they report `None`.
    pub fn lipschitz_a3(&self) -> Option<f64> {
        match self {
            GraphonSignal::Analytic { lipschitz_a3, .. } => *lipschitz_a3,
            GraphonSignal::Step(_) => None,
        }
    }

    pub fn as_step(&self) -> Option<&StepSignal> {
        match self {
            GraphonSignal::Step(s) => Some(s),
            _ => None,
        }
    }

    pub fn l2_norm(&self) -> f64 {
        match self {
            GraphonSignal::Step(s) => s.l2_norm(),
            GraphonSignal::Analytic { f, .. } => {
                quad::integrate(|u| f(u) * f(u), 0.0, 1.0, 1e-12).max(0.0).sqrt()
            }
        }
    }
}

/// Evaluate `X` at the regular grid points `u_i = (i-1)/n`.
pub fn sample_signal(x: &GraphonSignal, n: usize) -> Result<GraphSignal> {
    if n == 0 {
        return Err(Error::InvalidArgument("sample_signal: n must be >= 1".into()));
    }
    let out = Array1::from_shape_fn(n, |i| x.eval(i as f64 / n as f64));
    if !out.iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite("sampled signal"));
    }
    Ok(out)
}

/// Lift a graph signal to the step signal constant on each cell `I_i`.
pub fn induce_signal(x: &GraphSignal) -> StepSignal {
    StepSignal { values: x.clone() }
}

/// Walk the merged partition of two uniform grids, calling `acc(len, a, b)`
/// once per merged cell with the cell length and both step values. Breakpoint
/// comparisons are done on integers, so cells never split spuriously.
pub(crate) fn merged_cells<F: FnMut(f64, f64, f64)>(a: &StepSignal, b: &StepSignal, mut acc: F) {
    let (n1, n2) = (a.n() as u64, b.n() as u64);
    let (mut i, mut j) = (0u64, 0u64);
    let mut lo = 0.0f64;
    while i < n1 && j < n2 {
        // next breakpoint: min((i+1)/n1, (j+1)/n2) by cross-multiplication
        let lhs = (i + 1) * n2;
        let rhs = (j + 1) * n1;
        let hi = if lhs <= rhs { (i + 1) as f64 / n1 as f64 } else { (j + 1) as f64 / n2 as f64 };
        acc(hi - lo, a.values[i as usize], b.values[j as usize]);
        if lhs <= rhs {
            i += 1;
        }
        if rhs <= lhs {
            j += 1;
        }
        lo = hi;
    }
}

/// L2([0,1]) distance between two graphon signals.
///
/// Step vs step integrates exactly on the merged partition. If either side is
/// analytic the distance falls back to adaptive quadrature with absolute
/// tolerance 1e-9 on the squared integral, split at the step grid's
/// breakpoints so jumps never degrade the rule.
pub fn l2_distance(a: &GraphonSignal, b: &GraphonSignal) -> Result<f64> {
    let sq = match (a, b) {
        (GraphonSignal::Step(sa), GraphonSignal::Step(sb)) => {
            let mut sum = 0.0;
            merged_cells(sa, sb, |len, va, vb| {
                let d = va - vb;
                sum += d * d * len;
            });
            sum
        }
        _ => {
            let mut breaks = Vec::new();
            if let Some(s) = a.as_step() {
                breaks.extend(quad::uniform_breakpoints(s.n()));
            }
            if let Some(s) = b.as_step() {
                breaks.extend(quad::uniform_breakpoints(s.n()));
            }
            breaks.sort_by(|x, y| x.partial_cmp(y).unwrap());
            breaks.dedup();
            quad::integrate_unit_with_breakpoints(
                |u| {
                    let d = a.eval(u) - b.eval(u);
                    d * d
                },
                &breaks,
                1e-9,
            )
        }
    };
    if !sq.is_finite() {
        return Err(Error::NonFinite("l2_distance"));
    }
    Ok(sq.max(0.0).sqrt())
}

/// Serialize a graph signal or step signal to the plain-text vector format:
/// first line `n`, then one row of space-separated values with 17 significant
/// digits.
pub fn write_vector_text(values: &Array1<f64>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", values.len());
    let row: Vec<String> = values.iter().map(|v| format!("{v:.16e}")).collect();
    let _ = writeln!(s, "{}", row.join(" "));
    s
}

pub fn read_vector_text(text: &str) -> Result<Array1<f64>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| parse_err("vector", "empty input"))?
        .trim()
        .parse()
        .map_err(|e| parse_err("vector", &format!("bad length line: {e}")))?;
    let row = lines.next().ok_or_else(|| parse_err("vector", "missing data row"))?;
    let vals: Vec<f64> = row
        .split_whitespace()
        .map(|t| t.parse::<f64>().map_err(|e| parse_err("vector", &format!("bad value {t:?}: {e}"))))
        .collect::<Result<_>>()?;
    if vals.len() != n {
        return Err(parse_err("vector", &format!("expected {n} values, got {}", vals.len())));
    }
    Ok(Array1::from_vec(vals))
}

fn parse_err(context: &str, message: &str) -> Error {
    Error::Parse { context: context.into(), message: message.into() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_linear() {
        let x = GraphonSignal::linear();
        let v = sample_signal(&x, 4).unwrap();
        assert_eq!(v.as_slice().unwrap(), &[0.0, 0.25, 0.5, 0.75]);
    }

    #[test]
    fn sample_constant_and_sine() {
        let ones = sample_signal(&GraphonSignal::constant(1.0), 7).unwrap();
        assert!(ones.iter().all(|&v| v == 1.0));
        let s = sample_signal(&GraphonSignal::sine(), 2).unwrap();
        assert!(s[0].abs() < 1e-12 && s[1].abs() < 1e-12);
    }

    #[test]
    fn sample_rejects_zero() {
        assert!(sample_signal(&GraphonSignal::linear(), 0).is_err());
    }

    #[test]
    fn induce_two_values() {
        let s = induce_signal(&Array1::from_vec(vec![1.0, 2.0]));
        assert_eq!(s.eval(0.0), 1.0);
        assert_eq!(s.eval(0.49), 1.0);
        assert_eq!(s.eval(0.5), 2.0);
        assert_eq!(s.eval(1.0), 2.0);
    }

    #[test]
    fn induction_error_closed_form() {
        // X(u) = u sampled at n = 4: ||X - X_n|| = 1/(4 sqrt(3))
        let x = GraphonSignal::linear();
        let xn = GraphonSignal::Step(induce_signal(&sample_signal(&x, 4).unwrap()));
        let d = l2_distance(&x, &xn).unwrap();
        assert!((d - 1.0 / (4.0 * 3.0f64.sqrt())).abs() < 1e-9, "d = {d}");
    }

    #[test]
    fn merged_partition_distance() {
        // step [1,0] on n=2 vs step [0,1,0,1] on n=4 -> sqrt(1/2)
        let a = GraphonSignal::step(vec![1.0, 0.0]).unwrap();
        let b = GraphonSignal::step(vec![0.0, 1.0, 0.0, 1.0]).unwrap();
        let d = l2_distance(&a, &b).unwrap();
        assert!((d - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn analytic_norm() {
        // ||u||_{L2} = 1/sqrt(3)
        let d = l2_distance(&GraphonSignal::linear(), &GraphonSignal::constant(0.0)).unwrap();
        assert!((d - 1.0 / 3.0f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn distance_identical_is_zero() {
        let a = GraphonSignal::step(vec![0.3, -1.0, 2.0]).unwrap();
        assert_eq!(l2_distance(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn vector_text_round_trip() {
        let v = Array1::from_vec(vec![0.1, -2.5e-17, 3.0]);
        let text = write_vector_text(&v);
        let back = read_vector_text(&text).unwrap();
        assert_eq!(v, back);
    }

    #[test]
    fn refine_preserves_function() {
        let s = StepSignal::from_vec(vec![1.0, 2.0, 3.0]).unwrap();
        let r = s.refine(4);
        assert_eq!(r.n(), 12);
        for k in 0..100 {
            let u = k as f64 / 100.0;
            assert_eq!(s.eval(u), r.eval(u));
        }
    }
}
