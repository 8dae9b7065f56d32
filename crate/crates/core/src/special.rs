//! Scalar special functions: Bessel J of integer and half-integer order, the
//! rescaled form t^{-nu} J_nu(t), Gegenbauer and Laguerre polynomials, and the
//! Gamma function.
//!
//! Bessel evaluation strategy: the ascending power series where it is
//! cancellation-free (x <= 8), explicit trigonometric forms for orders
//! +-1/2, and backward (Miller) recurrence at larger x, normalized by the
//! Neumann sum for integer orders and by a trigonometric anchor for
//! half-integer orders. All functions are pure and deterministic.

use crate::error::{Error, Result};

/// A Bessel order: an integer or half-integer nu >= -1.
///
/// These are exactly the orders the kernel formulas produce: k + (m-2)/2 for
/// even m, and p +- 1/2 in the closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order(f64);

impl Order {
    pub fn new(nu: f64) -> Result<Self> {
        let doubled = 2.0 * nu;
        if !nu.is_finite() || doubled != doubled.round() || nu < -1.0 {
            return Err(Error::UnsupportedOrder(nu));
        }
        Ok(Self(nu))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 == self.0.round()
    }
}

const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// Lanczos coefficients, g = 7, 9 terms.
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_gamma(x: f64) -> f64 {
    // valid for x >= 0.5
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + 7.5;
    SQRT_2PI * t.powf(z + 0.5) * (-t).exp() * acc
}

/// Gamma for x > 0: exact products for the integer and half-integer arguments
/// every kernel formula uses (Gamma(n) = (n-1)!, Gamma(n+1/2) climbs from
/// sqrt(pi)), Lanczos for everything else.
fn gamma_pos(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x == x.round() && x <= 171.0 {
        return factorial(x as u32 - 1);
    }
    if 2.0 * x == (2.0 * x).round() && x <= 171.0 {
        let mut acc = std::f64::consts::PI.sqrt(); // Gamma(1/2)
        let mut a = 0.5;
        while a < x {
            acc *= a;
            a += 1.0;
        }
        return acc;
    }
    lanczos_gamma(x)
}

/// Gamma function for real arguments away from the poles 0, -1, -2, ...
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "gamma argument must be finite, got {x}"
        )));
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::GammaPole(x));
    }
    if x < 0.5 {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        let s = (std::f64::consts::PI * x).sin();
        Ok(std::f64::consts::PI / (s * gamma_pos(1.0 - x)))
    } else {
        Ok(gamma_pos(x))
    }
}

/// n! as f64, exact for n <= 22, correctly rounded products after.
pub fn factorial(n: u32) -> f64 {
    assert!(n <= 170, "factorial({n}) overflows f64");
    let mut acc = 1.0;
    for i in 2..=n as u64 {
        acc *= i as f64;
    }
    acc
}

/// Binomial coefficient as f64 via the multiplicative formula.
pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Ascending series for J_nu(x), nu >= 0. The alternating sum loses roughly
/// e^x of precision independent of order, so it is trusted only for x <= 8;
/// terms are generated by ratio recurrence and summed with Kahan compensation.
fn bessel_series(nu: f64, x: f64) -> f64 {
    debug_assert!(nu >= 0.0 && x >= 0.0);
    let half = 0.5 * x;
    // first term (x/2)^nu / Gamma(nu+1); 0^0 = 1 covers J_0(0)
    let mut term = half.powf(nu) / gamma_pos(nu + 1.0);
    let q = half * half;
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut max_term = 0.0f64;
    for j in 0..400u32 {
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        max_term = max_term.max(term.abs());
        term *= -q / ((j as f64 + 1.0) * (nu + j as f64 + 1.0));
        // past the peak the ratio is < 1/2 and the tail is geometric
        if term.abs() <= 1e-20 * max_term && q < 0.5 * (j as f64 + 2.0) * (nu + j as f64 + 2.0)
        {
            break;
        }
    }
    sum
}

/// J_{1/2}(x) = sqrt(2/(pi x)) sin x.
fn bessel_half_pos(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sin()
}

/// J_{-1/2}(x) = sqrt(2/(pi x)) cos x; diverges at x = 0.
fn bessel_half_neg(x: f64) -> f64 {
    if x == 0.0 {
        return f64::INFINITY;
    }
    (2.0 / (std::f64::consts::PI * x)).sqrt() * x.cos()
}

/// Backward (Miller) recurrence for the family J_{nu0+k}(x), k = 0..=n_out,
/// with nu0 = 0 (integer) or 1/2 (half-integer). Start high with an arbitrary
/// tail, recur down, normalize: integer families by the Neumann sum
/// J_0 + 2 sum_k J_{2k} = 1, half-integer families by whichever trigonometric
/// seed J_{+-1/2}(x) is larger in magnitude.
fn miller_family(half: bool, n_out: usize, x: f64) -> Vec<f64> {
    debug_assert!(x > 0.0);
    let nu0 = if half { 0.5 } else { 0.0 };
    let top = (n_out as f64 + nu0).max(x);
    let m_start = (top + 16.0 + 4.0 * top.sqrt()).ceil() as usize;
    let mut out = vec![0.0f64; n_out + 1];

    let mut f_hi = 0.0f64; // f at order nu0 + n + 1
    let mut f = 1e-30f64; // f at order nu0 + n
    let mut neumann = 0.0f64;
    let mut n = m_start;
    loop {
        if n <= n_out {
            out[n] = f;
        }
        if !half && n % 2 == 0 && n > 0 {
            neumann += 2.0 * f;
        }
        if n == 0 {
            neumann += f;
            break;
        }
        let next = (2.0 * (nu0 + n as f64) / x) * f - f_hi;
        f_hi = f;
        f = next;
        n -= 1;
        if f.abs() > 1e250 {
            f *= 1e-250;
            f_hi *= 1e-250;
            neumann *= 1e-250;
            for v in out.iter_mut() {
                *v *= 1e-250;
            }
        }
    }

    let scale = if half {
        // one more downward step reaches order -1/2
        let f_neg = (1.0 / x) * f - f_hi;
        let s = bessel_half_pos(x);
        let c = bessel_half_neg(x);
        if x.cos().abs() >= x.sin().abs() {
            c / f_neg
        } else {
            s / f
        }
    } else {
        1.0 / neumann
    };
    for v in out.iter_mut() {
        *v *= scale;
    }
    out
}

/// Bessel function of the first kind, J_nu(x), x >= 0.
pub fn bessel_j(nu: Order, x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "bessel_j requires finite x >= 0, got {x}"
        )));
    }
    let v = nu.value();
    if v == -1.0 {
        return Ok(-bessel_j(Order(1.0), x)?);
    }
    if v == -0.5 {
        return Ok(bessel_half_neg(x));
    }
    if v == 0.5 {
        return Ok(bessel_half_pos(x));
    }
    // the alternating series loses ~e^x of precision regardless of order, so
    // it is trusted only on a short interval; Miller is stable everywhere else
    if x <= 8.0 {
        return Ok(bessel_series(v, x));
    }
    if nu.is_integer() {
        let n = v as usize;
        Ok(miller_family(false, n, x)[n])
    } else {
        let n = (v - 0.5) as usize;
        Ok(miller_family(true, n, x)[n])
    }
}

/// The family J_{nu0}(x), J_{nu0+1}(x), ..., J_{nu0+count-1}(x) computed
/// consistently in one pass. Requires nu0 >= -1/2.
pub fn bessel_j_sequence(nu0: Order, count: usize, x: f64) -> Result<Vec<f64>> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "bessel_j_sequence requires finite x >= 0, got {x}"
        )));
    }
    let v0 = nu0.value();
    if v0 < -0.5 {
        return Err(Error::UnsupportedOrder(v0));
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let half = !nu0.is_integer();
    // orders v0 + k; map onto the base family starting at 0 or 1/2
    let base = if half { 0.5 } else { 0.0 };
    let lead_neg_half = half && v0 < 0.0;
    let offset = if lead_neg_half {
        0 // handled by prepending J_{-1/2}
    } else {
        (v0 - base) as usize
    };
    let n_top = if lead_neg_half {
        count.saturating_sub(2)
    } else {
        offset + count - 1
    };

    let family = if x == 0.0 {
        let mut fam = vec![0.0; n_top + 1];
        if !half {
            fam[0] = 1.0;
        }
        fam
    } else if x <= 8.0 {
        (0..=n_top).map(|k| bessel_series(base + k as f64, x)).collect()
    } else {
        miller_family(half, n_top, x)
    };

    if lead_neg_half {
        let mut out = Vec::with_capacity(count);
        out.push(bessel_half_neg(x));
        out.extend_from_slice(&family[..count - 1]);
        Ok(out)
    } else {
        Ok(family[offset..offset + count].to_vec())
    }
}

/// Rescaled Bessel function t^{-nu} J_nu(t), an even entire function of t.
/// Accepts any finite t through the even extension; requires nu >= -1/2.
pub fn bessel_j_tilde(nu: Order, t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "bessel_j_tilde requires finite t, got {t}"
        )));
    }
    let v = nu.value();
    if v < -0.5 {
        return Err(Error::UnsupportedOrder(v));
    }
    let tt = t.abs();
    if tt < 1.0 {
        // power series in t^2: sum_j (-1)^j t^{2j} / (2^{nu+2j} j! Gamma(nu+j+1))
        let mut term = 0.5f64.powf(v) / gamma_pos(v + 1.0);
        let q = 0.25 * tt * tt;
        let mut sum = 0.0;
        for j in 0..60u32 {
            sum += term;
            term *= -q / ((j as f64 + 1.0) * (v + j as f64 + 1.0));
            if term.abs() <= 1e-20 * sum.abs() {
                break;
            }
        }
        Ok(sum)
    } else {
        Ok(tt.powf(-v) * bessel_j(nu, tt)?)
    }
}

/// Gegenbauer polynomial C_k^lambda(w) by the three-term recurrence.
/// Requires lambda > 0; the lambda -> 0 limit lives in
/// [`gegenbauer_lambda0_scaled`].
pub fn gegenbauer(k: usize, lambda: f64, w: f64) -> Result<f64> {
    Ok(*gegenbauer_sequence(k, lambda, w)?.last().expect("nonempty"))
}

/// All of C_0^lambda(w) ..= C_{k_max}^lambda(w) in one recurrence pass.
pub fn gegenbauer_sequence(k_max: usize, lambda: f64, w: f64) -> Result<Vec<f64>> {
    if lambda == 0.0 {
        return Err(Error::InvalidParameter(
            "gegenbauer lambda = 0: the polynomials vanish for k >= 1; \
             use gegenbauer_lambda0_scaled for the lambda -> 0 limit"
                .into(),
        ));
    }
    if !(lambda > 0.0) || !w.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "gegenbauer requires lambda > 0 and finite w, got lambda = {lambda}, w = {w}"
        )));
    }
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(1.0);
    if k_max == 0 {
        return Ok(out);
    }
    out.push(2.0 * lambda * w);
    for n in 1..k_max {
        let nf = n as f64;
        let next =
            (2.0 * (nf + lambda) * w * out[n] - (nf + 2.0 * lambda - 1.0) * out[n - 1])
                / (nf + 1.0);
        out.push(next);
    }
    Ok(out)
}

/// The limit lim_{lambda -> 0} C_n^lambda(cos theta) / lambda
/// = (2/n) cos(n theta), defined for n >= 1.
pub fn gegenbauer_lambda0_scaled(n: usize, theta: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "gegenbauer_lambda0_scaled requires n >= 1 (C_0 does not vanish with lambda)"
                .into(),
        ));
    }
    Ok((2.0 / n as f64) * (n as f64 * theta).cos())
}

/// Generalized Laguerre polynomial L_j^a(x), a > -1, x >= 0.
pub fn laguerre(j: usize, a: f64, x: f64) -> Result<f64> {
    if !(a > -1.0) {
        return Err(Error::InvalidParameter(format!(
            "laguerre requires a > -1, got {a}"
        )));
    }
    if !x.is_finite() || x < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "laguerre requires finite x >= 0, got {x}"
        )));
    }
    let mut lo = 1.0;
    if j == 0 {
        return Ok(lo);
    }
    let mut hi = 1.0 + a - x;
    for n in 1..j {
        let nf = n as f64;
        let next = ((2.0 * nf + 1.0 + a - x) * hi - (nf + a) * lo) / (nf + 1.0);
        lo = hi;
        hi = next;
    }
    Ok(hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(v: f64) -> Order {
        Order::new(v).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn gamma_classical_values() {
        assert_eq!(gamma_fn(1.0).unwrap(), 1.0);
        assert!(rel(gamma_fn(0.5).unwrap(), std::f64::consts::PI.sqrt()) < 1e-14);
        // Gamma(7/2) = 15 sqrt(pi) / 8
        assert!(rel(gamma_fn(3.5).unwrap(), 15.0 * std::f64::consts::PI.sqrt() / 8.0) < 1e-14);
        for n in 1..=20u32 {
            assert!(rel(gamma_fn(n as f64).unwrap(), factorial(n - 1)) < 1e-14);
        }
    }

    /// Frozen independent high-precision values.
    #[test]
    fn gamma_frozen_table() {
        let table = [
            (3.5, 3.3233509704478425512),
            (0.123, 7.6624172619623119553),
            (99.5, 9.3678021146559965913e154),
        ];
        for (x, want) in table {
            assert!(rel(gamma_fn(x).unwrap(), want) < 1e-13, "Gamma({x})");
        }
    }

    #[test]
    fn gamma_functional_equation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let x: f64 = rng.gen_range(0.05..80.0);
            let lhs = gamma_fn(x + 1.0).unwrap();
            let rhs = x * gamma_fn(x).unwrap();
            assert!(rel(lhs, rhs) < 2e-13, "x = {x}");
        }
    }

    #[test]
    fn gamma_poles_error() {
        for x in [0.0, -1.0, -2.0, -7.0] {
            assert!(matches!(gamma_fn(x), Err(Error::GammaPole(_))));
        }
        // reflection side stays finite and accurate: Gamma(-0.5) = -2 sqrt(pi)
        assert!(
            rel(gamma_fn(-0.5).unwrap(), -2.0 * std::f64::consts::PI.sqrt()) < 1e-13
                || (gamma_fn(-0.5).unwrap() + 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-13
        );
    }

    #[test]
    fn order_validation() {
        assert!(Order::new(0.3).is_err());
        assert!(Order::new(-1.5).is_err());
        assert!(Order::new(f64::NAN).is_err());
        assert!(Order::new(-1.0).is_ok());
        assert!(Order::new(40.5).is_ok());
        assert!(ord(3.0).is_integer());
        assert!(!ord(2.5).is_integer());
    }

    #[test]
    fn bessel_trivial_anchors() {
        assert_eq!(bessel_j(ord(0.0), 0.0).unwrap(), 1.0);
        for v in [1.0, 2.0, 5.0, 0.5, 3.5] {
            assert_eq!(bessel_j(ord(v), 0.0).unwrap(), 0.0, "J_{v}(0)");
        }
        assert_eq!(bessel_j(ord(-0.5), 0.0).unwrap(), f64::INFINITY);
        // J_{1/2}(pi/2) = 2/pi
        let v = bessel_j(ord(0.5), std::f64::consts::FRAC_PI_2).unwrap();
        assert!(rel(v, 2.0 / std::f64::consts::PI) < 1e-15);
    }

    /// Two independent methods agree: ascending series vs Miller backward
    /// recurrence, evaluated where both are trustworthy.
    #[test]
    fn bessel_two_method_cross_check() {
        for (n, x) in [(3usize, 10.0f64), (0, 6.0), (5, 8.0), (2, 4.0), (8, 8.0)] {
            let series = bessel_series(n as f64, x);
            let miller = miller_family(false, n, x)[n];
            assert!(
                (series - miller).abs() <= 1e-12 * miller.abs().max(1.0),
                "J_{n}({x}): series {series:e} vs miller {miller:e}"
            );
        }
    }

    /// Frozen independent high-precision values across all routing branches.
    #[test]
    fn bessel_frozen_table() {
        let table = [
            (3.0, 10.0, 0.058379379305186812343),   // integer, Miller
            (0.0, 12.0, 0.047689310796833536624),   // integer, Miller
            (12.0, 12.0, 0.19528018273883224329),   // order near argument
            (40.0, 30.0, 0.00036120236088965853089), // order above argument
            (2.0, 0.05, 0.00031243490091938443206), // integer, small-x series
            (7.0, 45.0, -0.083727351754599594137),  // integer, Miller
            (20.0, 50.0, -0.11670435275957973734),  // integer, Miller
            (62.0, 45.0, 3.8092742514022411436e-6), // deep decay regime
            (80.0, 50.0, 2.8051557721833452316e-11), // top of the order range
            (1.5, 2.7, 0.51585814603350649332),     // half-integer, series
            (2.5, 35.0, 0.068053050451804672518),   // half-integer, Miller
            (10.5, 6.0, 0.0038265417765472617956),  // half-integer, series
            (40.5, 45.0, 0.15446106211998475836),   // half-integer, Miller
        ];
        for (v, x, want) in table {
            let got = bessel_j(ord(v), x).unwrap();
            assert!(rel(got, want) < 1e-12, "J_{v}({x}): got {got:e}, want {want:e}");
        }
    }

    #[test]
    fn bessel_negative_order_symmetry() {
        for x in [0.7, 4.0, 19.0] {
            let a = bessel_j(ord(-1.0), x).unwrap();
            let b = -bessel_j(ord(1.0), x).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn bessel_domain_errors() {
        assert!(bessel_j(ord(2.0), -1.0).is_err());
        assert!(bessel_j(ord(2.0), f64::NAN).is_err());
        assert!(bessel_j_sequence(ord(-1.0), 3, 1.0).is_err());
        assert!(bessel_j_tilde(ord(-1.0), 1.0).is_err());
    }

    /// Three-term recurrence residual over the supported grid, both parities.
    #[test]
    fn bessel_recurrence_residual() {
        let xs = [0.1, 0.5, 1.0, 2.0, 5.0, 8.0, 8.5, 12.0, 20.0, 30.0, 40.0, 50.0];
        for &x in &xs {
            for twice_nu in 0..=80u32 {
                let v = twice_nu as f64 / 2.0;
                let jm = bessel_j(ord(v - 1.0), x).unwrap();
                let j0 = bessel_j(ord(v), x).unwrap();
                let jp = bessel_j(ord(v + 1.0), x).unwrap();
                let resid = (jm + jp - (2.0 * v / x) * j0).abs();
                assert!(
                    resid <= 1e-11 * j0.abs().max(1.0),
                    "nu = {v}, x = {x}: residual {resid:e}"
                );
            }
        }
    }

    /// Half-integer values against their closed trigonometric forms.
    #[test]
    fn bessel_half_integer_trig_forms() {
        for &x in &[0.3f64, 1.0, 2.7, 10.0, 35.0] {
            let c = (2.0 / (std::f64::consts::PI * x)).sqrt();
            let j32 = c * (x.sin() / x - x.cos());
            let j52 = c * ((3.0 / (x * x) - 1.0) * x.sin() - 3.0 * x.cos() / x);
            let g32 = bessel_j(ord(1.5), x).unwrap();
            let g52 = bessel_j(ord(2.5), x).unwrap();
            assert!((g32 - j32).abs() <= 1e-12 * j32.abs().max(1e-6), "J_3/2({x})");
            assert!((g52 - j52).abs() <= 1e-12 * j52.abs().max(1e-6), "J_5/2({x})");
        }
    }

    #[test]
    fn bessel_sequence_matches_single_calls() {
        for &x in &[0.0, 0.3, 3.0, 9.5, 27.0] {
            for (v0, count) in [(0.0, 12), (1.0, 8), (0.5, 10), (-0.5, 6), (2.5, 5)] {
                let seq = bessel_j_sequence(ord(v0), count, x).unwrap();
                assert_eq!(seq.len(), count);
                for (k, &sv) in seq.iter().enumerate() {
                    let single = bessel_j(ord(v0 + k as f64), x).unwrap();
                    if single.is_infinite() {
                        assert!(sv.is_infinite());
                        continue;
                    }
                    assert!(
                        (sv - single).abs() <= 1e-12 * single.abs().max(1e-8),
                        "nu = {}, x = {x}: seq {sv:e} vs single {single:e}",
                        v0 + k as f64
                    );
                }
            }
        }
    }

    #[test]
    fn j_tilde_anchors_and_evenness() {
        // J~_{-1/2}(0) = sqrt(2/pi), the limit of sqrt(2/pi) cos t
        assert!(rel(
            bessel_j_tilde(ord(-0.5), 0.0).unwrap(),
            (2.0 / std::f64::consts::PI).sqrt()
        ) < 1e-14);
        // J~_{1/2}(1) = sqrt(2/pi) sin 1
        assert!(rel(
            bessel_j_tilde(ord(0.5), 1.0).unwrap(),
            (2.0 / std::f64::consts::PI).sqrt() * 1.0f64.sin()
        ) < 1e-13);
        assert_eq!(bessel_j_tilde(ord(0.0), 0.0).unwrap(), 1.0);
        // J~_nu(0) = 1 / (2^nu Gamma(nu+1))
        assert!(rel(bessel_j_tilde(ord(2.0), 0.0).unwrap(), 0.125) < 1e-14);
        // even in t
        for v in [0.0, 1.0, 2.5] {
            assert_eq!(
                bessel_j_tilde(ord(v), -3.2).unwrap(),
                bessel_j_tilde(ord(v), 3.2).unwrap()
            );
        }
    }

    #[test]
    fn j_tilde_frozen_table_and_branch_continuity() {
        let table = [
            (1.5, 0.3, 0.26357554766201028043),
            (2.0, 3.0, 0.054010140065099008545),
            (-0.5, 2.0, -0.33203713590791850073),
        ];
        for (v, t, want) in table {
            assert!(rel(bessel_j_tilde(ord(v), t).unwrap(), want) < 1e-12, "Jt_{v}({t})");
        }
        // frozen values straddling the series/direct switch at |t| = 1
        let near_switch = [
            (0.0, 0.999, 0.76563757451597947251),
            (0.0, 1.001, 0.76475747345287196794),
            (0.5, 0.999, 0.67163690955686579183),
            (0.5, 1.001, 0.67115631392572034237),
            (1.0, 0.999, 0.44016544155043287495),
            (1.0, 1.001, 0.43993563459930688107),
            (3.5, 0.999, 0.0071870183264206019792),
            (3.5, 1.001, 0.0071854049786840297057),
        ];
        for (v, t, want) in near_switch {
            assert!(rel(bessel_j_tilde(ord(v), t).unwrap(), want) < 1e-13, "Jt_{v}({t})");
        }
    }

    #[test]
    fn gegenbauer_anchors() {
        assert_eq!(gegenbauer(0, 0.7, 0.2).unwrap(), 1.0);
        // C_1^lambda(w) = 2 lambda w
        assert!((gegenbauer(1, 1.0, 0.3).unwrap() - 0.6).abs() < 1e-15);
        // C_2^1(w) = 4w^2 - 1
        assert!((gegenbauer(2, 1.0, 0.5).unwrap() - 0.0).abs() < 1e-15);
        // frozen exact rational values
        assert!(rel(gegenbauer(5, 1.5, 0.3).unwrap(), 2.02174875) < 1e-14);
        assert!(rel(gegenbauer(10, 3.0, -0.7).unwrap(), 52.9242556416) < 1e-13);
    }

    /// sum_k C_k^lambda(w) r^k = (1 - 2rw + r^2)^(-lambda), truncated at 60.
    #[test]
    fn gegenbauer_generating_function() {
        for &lambda in &[0.5, 1.0, 1.5, 3.0] {
            for &w in &[-0.9, -0.3, 0.2, 0.8, 1.0] {
                let r = 0.3f64;
                let seq = gegenbauer_sequence(60, lambda, w).unwrap();
                let mut sum = 0.0;
                let mut rk = 1.0;
                for c in &seq {
                    sum += c * rk;
                    rk *= r;
                }
                let closed = (1.0 - 2.0 * r * w + r * r).powf(-lambda);
                assert!(
                    (sum - closed).abs() < 1e-10,
                    "lambda = {lambda}, w = {w}: {sum} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn gegenbauer_lambda0_limit() {
        for n in 1..=8usize {
            for &theta in &[0.2, 1.0, 2.5] {
                let scaled = gegenbauer_lambda0_scaled(n, theta).unwrap();
                let small = gegenbauer(n, 1e-6, theta.cos()).unwrap() / 1e-6;
                assert!((scaled - small).abs() < 1e-5, "n = {n}, theta = {theta}");
            }
        }
        // anchors
        assert!((gegenbauer_lambda0_scaled(1, 0.0).unwrap() - 2.0).abs() < 1e-15);
        assert!(
            (gegenbauer_lambda0_scaled(2, std::f64::consts::FRAC_PI_2).unwrap() + 1.0).abs()
                < 1e-15
        );
        assert!(
            (gegenbauer_lambda0_scaled(4, std::f64::consts::FRAC_PI_3).unwrap() + 0.25).abs()
                < 1e-15
        );
    }

    #[test]
    fn gegenbauer_domain_errors() {
        let err = gegenbauer(3, 0.0, 0.5);
        match err {
            Err(Error::InvalidParameter(msg)) => {
                assert!(msg.contains("gegenbauer_lambda0_scaled"));
            }
            other => panic!("expected lambda = 0 error, got {other:?}"),
        }
        assert!(gegenbauer(3, -1.0, 0.5).is_err());
        assert!(gegenbauer_lambda0_scaled(0, 1.0).is_err());
    }

    #[test]
    fn laguerre_anchors() {
        assert_eq!(laguerre(0, 0.7, 2.2).unwrap(), 1.0);
        // L_1^a(x) = 1 + a - x
        assert!((laguerre(1, 0.7, 2.2).unwrap() - (1.0 + 0.7 - 2.2)).abs() < 1e-15);
        // explicit L_2^a(x) = (a+1)(a+2)/2 - (a+2)x + x^2/2
        let explicit = |a: f64, x: f64| 0.5 * (a + 1.0) * (a + 2.0) - (a + 2.0) * x + 0.5 * x * x;
        for (a, x) in [(1.0, 2.0), (0.5, 0.0), (2.0, 4.4)] {
            let got = laguerre(2, a, x).unwrap();
            assert!((got - explicit(a, x)).abs() < 1e-13, "a = {a}, x = {x}");
        }
        assert_eq!(laguerre(2, 1.0, 2.0).unwrap(), -1.0);
        // frozen high-precision values
        assert!(rel(laguerre(3, 1.5, 2.4).unwrap(), -1.6815) < 1e-13);
        assert!(rel(laguerre(5, 3.0, 7.5).unwrap(), -5.81640625) < 1e-13);
    }

    /// Orthogonality: integral_0^inf x e^{-x} L_1^1(x) L_2^1(x) dx = 0.
    #[test]
    fn laguerre_orthogonality_quadrature() {
        let rule = crate::quadrature::gauss_legendre(200);
        let mut sum = 0.0;
        // map [-1,1] -> [0,60]; e^{-60} is below double precision
        for (&node, &weight) in rule.nodes.iter().zip(&rule.weights) {
            let x = 30.0 * (node + 1.0);
            let f = x * (-x).exp()
                * laguerre(1, 1.0, x).unwrap()
                * laguerre(2, 1.0, x).unwrap();
            sum += 30.0 * weight * f;
        }
        assert!(sum.abs() < 1e-8, "orthogonality residual {sum:e}");
    }

    #[test]
    fn laguerre_domain_errors() {
        assert!(laguerre(1, -1.0, 0.5).is_err());
        assert!(laguerre(1, 0.5, -0.1).is_err());
    }

    #[test]
    fn binomial_and_factorial() {
        assert_eq!(factorial(0), 1.0);
        assert_eq!(factorial(5), 120.0);
        assert_eq!(binomial(6, 2), 15.0);
        assert_eq!(binomial(3, 5), 0.0);
        assert_eq!(binomial(10, 10), 1.0);
    }
}
