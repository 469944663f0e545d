//! Adaptive quadrature used wherever an analytic kernel or signal enters an
//! L2 norm. Step-vs-step integrals never come through here: those are exact
//! merged-partition sums (see [`crate::signal`] and [`crate::graphon`]).

fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b))
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, eps: f64, whole: f64, depth: u32) -> f64 {
    let c = 0.5 * (a + b);
    let left = simpson(f, a, c);
    let right = simpson(f, c, b);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * eps {
        left + right + delta / 15.0
    } else {
        adaptive(f, a, c, 0.5 * eps, left, depth - 1) + adaptive(f, c, b, 0.5 * eps, right, depth - 1)
    }
}

/// Adaptive Simpson integration of `f` over `[a, b]` to absolute tolerance `eps`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, eps: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    adaptive(&f, a, b, eps, simpson(&f, a, b), 40)
}

/// Integrate `f` over `[0, 1]` splitting at the given sorted breakpoints, so the
/// adaptive rule never straddles a kink of a piecewise integrand. The tolerance
/// is distributed over the pieces.
pub fn integrate_unit_with_breakpoints<F: Fn(f64) -> f64>(f: F, breaks: &[f64], eps: f64) -> f64 {
    let mut total = 0.0;
    let mut prev = 0.0;
    let per = eps / (breaks.len() + 1) as f64;
    for &b in breaks.iter().chain(std::iter::once(&1.0)) {
        if b > prev {
            total += integrate(&f, prev, b, per);
            prev = b;
        }
    }
    total
}

/// Iterated adaptive integration of `f(u, v)` over `[0,1]^2` with breakpoints
/// on both axes. Inner integrals run in `u`, the outer in `v`.
pub fn integrate2d_unit<F: Fn(f64, f64) -> f64>(f: F, breaks_u: &[f64], breaks_v: &[f64], eps: f64) -> f64 {
    // Half the budget to the outer rule, half spread over the inner calls.
    let inner_eps = 0.5 * eps;
    integrate_unit_with_breakpoints(
        |v| integrate_unit_with_breakpoints(|u| f(u, v), breaks_u, inner_eps),
        breaks_v,
        0.5 * eps,
    )
}

/// Breakpoints `{1/n, ..., (n-1)/n}` of the uniform n-cell partition of `[0,1]`.
pub fn uniform_breakpoints(n: usize) -> Vec<f64> {
    (1..n).map(|i| i as f64 / n as f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let v = integrate(|x| x * x, 0.0, 1.0, 1e-12);
        assert!((v - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn kinked_integrand() {
        // |x - 1/3| integrates to 1/2 * (1/9 + 4/9) = 5/18
        let v = integrate(|x| (x - 1.0 / 3.0).abs(), 0.0, 1.0, 1e-10);
        assert!((v - 5.0 / 18.0).abs() < 1e-9);
    }

    #[test]
    fn two_dimensional() {
        let v = integrate2d_unit(|u, v| u * v, &[], &[], 1e-10);
        assert!((v - 0.25).abs() < 1e-9);
        let w = integrate2d_unit(|u, v| (u * v).powi(2), &uniform_breakpoints(4), &[], 1e-10);
        assert!((w - 1.0 / 9.0).abs() < 1e-9);
    }
}
