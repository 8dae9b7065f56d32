//! Gauss-Legendre quadrature rules and tensor-product grids.
//!
//! Rules are generated by Newton iteration on the Legendre recurrence and are
//! deterministic. Tensor grids over [-R, R]^m are addressed by flat index so
//! integration loops never materialize the full node set.

use crate::algebra::Vector;
use crate::error::{Error, Result};

/// Nodes and weights on the reference interval [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendreRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Legendre P_n(x) and its derivative by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0; // P_0
    let mut p = x; // P_1
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let p_next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = p_next;
    }
    // P'_n(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// The n-point Gauss-Legendre rule. Exact for polynomials of degree 2n-1.
pub fn gauss_legendre(n: usize) -> GaussLegendreRule {
    assert!(n >= 1, "quadrature rule needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Tricomi-style initial guess, then Newton
        let mut x =
            (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                let (p2, d2) = legendre_with_derivative(n, x);
                dp = d2;
                x -= p2 / d2;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // the guess enumerates nodes from +1 downward; mirror for symmetry
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[i] = w;
        weights[n - 1 - i] = w;
        if 2 * i + 1 == n {
            nodes[i] = 0.0;
        }
    }
    GaussLegendreRule { nodes, weights }
}

/// Integrate a scalar function over [a, b] with an n-point rule.
pub fn integrate_1d(rule: &GaussLegendreRule, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        sum += w * f(mid + half * x);
    }
    half * sum
}

/// Tensor-product Gauss-Legendre grid on the box [-radius, radius]^dim.
#[derive(Debug, Clone)]
pub struct TensorGrid {
    rule: GaussLegendreRule,
    radius: f64,
    dim: usize,
}

impl TensorGrid {
    pub fn new(nodes_per_axis: usize, radius: f64, dim: usize) -> Result<Self> {
        if nodes_per_axis < 8 {
            return Err(Error::InvalidParameter(format!(
                "tensor grid needs >= 8 nodes per axis, got {nodes_per_axis}"
            )));
        }
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "tensor grid radius must be positive, got {radius}"
            )));
        }
        if dim == 0 || dim > crate::algebra::MAX_DIMENSION {
            return Err(Error::UnsupportedDimension {
                m: dim,
                reason: "tensor grids cover 1 <= m <= 8 axes",
            });
        }
        Ok(Self {
            rule: gauss_legendre(nodes_per_axis),
            radius,
            dim,
        })
    }

    pub fn nodes_per_axis(&self) -> usize {
        self.rule.nodes.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Total node count n^dim, checked against usize overflow.
    pub fn node_count(&self) -> usize {
        self.rule
            .nodes
            .len()
            .checked_pow(self.dim as u32)
            .expect("node count overflows usize")
    }

    /// The flat-indexed node: coordinates in the box and the combined weight
    /// (axis weights times the volume scaling).
    pub fn point(&self, flat: usize) -> (Vector, f64) {
        let n = self.rule.nodes.len();
        let mut rest = flat;
        let mut coords = vec![0.0; self.dim];
        let mut weight = 1.0;
        for c in coords.iter_mut() {
            let i = rest % n;
            rest /= n;
            *c = self.radius * self.rule.nodes[i];
            weight *= self.radius * self.rule.weights[i];
        }
        debug_assert_eq!(rest, 0, "flat index out of range");
        (
            Vector::new(coords).expect("grid coordinates are finite"),
            weight,
        )
    }
}
