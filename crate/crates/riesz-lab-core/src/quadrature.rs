//! Composite Gauss-Legendre quadrature sized for products of eigenfunctions
//! against power weights `(1+|x|)^{±α}`.
//!
//! Gauss-Hermite exactness breaks down once the power weight enters, so the
//! rules here are panel rules on a truncated interval: the interval is chosen
//! so the eigenfunction tails contribute below 1e-14, and the panel width is
//! tied to the highest product frequency `2√(2K+3)` so each panel resolves
//! the oscillation with margin. Panel edges meet at 0, keeping the |x| kink
//! of the weight on a boundary.

use crate::hermite::HermiteTable;
use crate::{Error, Result};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

/// Largest degree `build_rule` accepts.
pub const MAX_RULE_DEGREE: usize = 1 << 14;

const PANEL_ORDER: usize = 24;

/// Gauss-Legendre nodes and weights on [-1, 1], ascending nodes.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 1);
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    let n = order as f64;
    for i in 0..(order + 1) / 2 {
        // Newton from the Chebyshev-like initial guess
        let mut x = -(core::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            if order == 1 {
                p1 = x;
            }
            for k in 1..order {
                let kf = k as f64;
                let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = x;
        nodes[order - 1 - i] = -x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
    if order % 2 == 1 {
        nodes[order / 2] = 0.0;
    }
    (nodes, weights)
}

/// Composite Gauss-Legendre rule on [a, b] resolving oscillation frequency
/// `max_freq` (radians per unit length).
pub fn interval_rule(a: f64, b: f64, max_freq: f64, order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(b > a);
    let width = 0.75 * order as f64 / max_freq.max(6.0);
    let panels = ((b - a) / width).ceil().max(1.0) as usize;
    composite(a, b, panels, order)
}

fn composite(a: f64, b: f64, panels: usize, order: usize) -> (Vec<f64>, Vec<f64>) {
    let (xg, wg) = gauss_legendre(order);
    let mut nodes = Vec::with_capacity(panels * order);
    let mut weights = Vec::with_capacity(panels * order);
    let h = (b - a) / panels as f64;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        for (x, w) in xg.iter().zip(&wg) {
            nodes.push(mid + 0.5 * h * x);
            weights.push(0.5 * h * w);
        }
    }
    (nodes, weights)
}

/// Symmetric rule on [-L, L] for inner products `∫ h_j h_k (1+|x|)^{±α} dx`,
/// `j, k ≤ design_degree`, with all exponents `|a| ≤ validated_exponent`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    halfwidth: f64,
    design_degree: usize,
    validated_exponent: f64,
}

/// How far the truncated interval must reach so that `h_K² (1+|x|)^α`
/// contributes below ~1e-16 outside.
pub(crate) fn tail_halfwidth(max_degree: usize, weight_exponent: f64) -> f64 {
    let n = 2.0 * max_degree as f64 + 3.0;
    (n + 40.0 + weight_exponent.abs() * (n + 43.0).ln()).sqrt() + 1.0
}

/// Build a rule exact to ~1e-12 relative for degree-`max_degree` products
/// against `(1+|x|)^{±a}`, `|a| ≤ weight_exponent`.
pub fn build_rule(max_degree: usize, weight_exponent: f64) -> Result<QuadratureRule> {
    if max_degree > MAX_RULE_DEGREE {
        return Err(Error::DegreeTooLarge { requested: max_degree, max: MAX_RULE_DEGREE });
    }
    if !weight_exponent.is_finite() || weight_exponent < 0.0 {
        return Err(Error::InvalidArgument("weight exponent must be finite and >= 0"));
    }
    let l = tail_halfwidth(max_degree, weight_exponent);
    let omega = 2.0 * (2.0 * max_degree as f64 + 3.0).sqrt() + 2.0;
    let width = 0.75 * PANEL_ORDER as f64 / omega.max(8.0);
    // even panel count puts a panel edge exactly on the |x| kink at 0
    let panels = 2 * ((l / width).ceil() as usize).max(1);
    let (nodes, weights) = composite(-l, l, panels, PANEL_ORDER);
    Ok(QuadratureRule {
        nodes,
        weights,
        halfwidth: l,
        design_degree: max_degree,
        validated_exponent: weight_exponent,
    })
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn halfwidth(&self) -> f64 {
        self.halfwidth
    }

    pub fn design_degree(&self) -> usize {
        self.design_degree
    }

    pub fn validated_exponent(&self) -> f64 {
        self.validated_exponent
    }

    pub fn from_parts(
        nodes: Vec<f64>,
        weights: Vec<f64>,
        design_degree: usize,
        validated_exponent: f64,
    ) -> Result<Self> {
        if nodes.len() != weights.len() || nodes.is_empty() {
            return Err(Error::InvalidArgument("rule node/weight length mismatch"));
        }
        let halfwidth = nodes.last().unwrap().abs().max(nodes[0].abs());
        Ok(QuadratureRule { nodes, weights, halfwidth, design_degree, validated_exponent })
    }

    /// `∫ f` over the truncated interval.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// `∫ f g` for sampled functions on the rule nodes.
    pub fn inner_product(&self, f: &[f64], g: &[f64]) -> f64 {
        self.weights.iter().zip(f.iter().zip(g)).map(|(&w, (&a, &b))| w * a * b).sum()
    }

    /// Hermite value table on the rule nodes up to `max_degree`.
    pub fn hermite_table(&self, max_degree: usize) -> Result<HermiteTable> {
        HermiteTable::build(max_degree, &self.nodes)
    }

    pub fn check_exponent(&self, a: f64) -> Result<()> {
        if a.abs() > self.validated_exponent + 1e-12 {
            return Err(Error::OutOfRange("weight exponent beyond the rule's validated range"));
        }
        Ok(())
    }
}
