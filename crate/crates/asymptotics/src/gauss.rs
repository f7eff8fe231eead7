//! Gauss–Legendre quadrature rules on [-1, 1].

/// Nodes and weights of an `order`-point Gauss–Legendre rule, exact for
/// polynomials up to degree `2*order - 1`.
///
/// Roots of the Legendre polynomial are found by Newton iteration from the
/// Chebyshev initial guess; only half are computed and the rule is mirrored,
/// so it is symmetric to the last bit.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "rule needs at least one node");
        let mut nodes = vec![0.0; order];
        let mut weights = vec![0.0; order];
        let half = order / 2;
        for k in 0..half {
            let (x, w) = legendre_root(order, k);
            // roots come out in descending order; mirror into both halves
            nodes[order - 1 - k] = x;
            weights[order - 1 - k] = w;
            nodes[k] = -x;
            weights[k] = w;
        }
        if order % 2 == 1 {
            let (_, dp) = legendre_pair(order, 0.0);
            nodes[half] = 0.0;
            weights[half] = 2.0 / (dp * dp);
        }
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// Legendre polynomial value and derivative at `x`, by the three-term
/// recurrence.
fn legendre_pair(order: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=order {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    if order == 0 {
        return (1.0, 0.0);
    }
    let n = order as f64;
    let dp = n * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// The k-th positive root (k = 0 is the largest) and its weight.
fn legendre_root(order: usize, k: usize) -> (f64, f64) {
    let n = order as f64;
    let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n + 0.5)).cos();
    for _ in 0..100 {
        let (p, dp) = legendre_pair(order, x);
        let step = p / dp;
        x -= step;
        if step.abs() <= 1e-15 {
            break;
        }
    }
    let (_, dp) = legendre_pair(order, x);
    let w = 2.0 / ((1.0 - x * x) * dp * dp);
    (x, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn integrate(rule: &GaussLegendre, f: impl Fn(f64) -> f64) -> f64 {
        rule.nodes()
            .iter()
            .zip(rule.weights())
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    #[test]
    fn weights_sum_to_two() {
        for order in 1..=12 {
            let rule = GaussLegendre::new(order);
            let total: f64 = rule.weights().iter().sum();
            assert!((total - 2.0).abs() < 1e-14, "order {order}: {total}");
        }
    }

    #[test]
    fn nodes_are_symmetric_and_sorted() {
        for order in [5, 7, 8] {
            let rule = GaussLegendre::new(order);
            let nodes = rule.nodes();
            for k in 0..order {
                assert_eq!(nodes[k], -nodes[order - 1 - k]);
                if k > 0 {
                    assert!(nodes[k] > nodes[k - 1]);
                }
            }
        }
    }

    #[test]
    fn seven_point_rule_matches_reference_nodes() {
        let rule = GaussLegendre::new(7);
        // Abramowitz & Stegun table 25.4
        let reference = [
            (0.949107912342759, 0.129484966168870),
            (0.741531185599394, 0.279705391489277),
            (0.405845151377397, 0.381830050505119),
            (0.0, 0.417959183673469),
        ];
        for (i, &(x, w)) in reference.iter().enumerate() {
            assert!((rule.nodes()[6 - i] - x).abs() < 1e-14);
            assert!((rule.weights()[6 - i] - w).abs() < 1e-14);
        }
    }

    #[test]
    fn exact_on_polynomials_up_to_degree_13() {
        let rule = GaussLegendre::new(7);
        for degree in 0..=13u32 {
            let exact = if degree % 2 == 1 {
                0.0
            } else {
                2.0 / f64::from(degree + 1)
            };
            let got = integrate(&rule, |x| x.powi(degree as i32));
            assert!((got - exact).abs() < 1e-14, "degree {degree}: {got}");
        }
    }

    #[test]
    fn degree_14_shows_truncation() {
        let rule = GaussLegendre::new(7);
        let got = integrate(&rule, |x| x.powi(14));
        assert!((got - 2.0 / 15.0).abs() > 1e-9);
    }
}
