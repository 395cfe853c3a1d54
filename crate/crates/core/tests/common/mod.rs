use infield::lp::{lp_max, lp_min, LpCoefficients};
use infield::numerics::primes_up_to;
use minilp::{ComparisonOp, OptimizationDirection, Problem};

pub const ORACLE_PRIMES: u64 = 50;

/// Generic simplex over x_0, x_1 and x_p for primes up to `ORACLE_PRIMES`.
pub fn oracle(c: &LpCoefficients<f64>, direction: OptimizationDirection) -> f64 {
    let mut lp = Problem::new(direction);
    let x0_max = if c.x0_admissible() { f64::INFINITY } else { 0.0 };
    let x1_max = if c.x1_admissible() { f64::INFINITY } else { 0.0 };
    let x0 = lp.add_var(-c.b0, (0.0, x0_max));
    let x1 = lp.add_var(-c.b1, (0.0, x1_max));
    let mut budget = vec![(x0, c.a0), (x1, c.a1)];
    for p in primes_up_to(ORACLE_PRIMES).unwrap() {
        let xp = lp.add_var(c.b(p), (0.0, f64::INFINITY));
        lp.add_constraint([(xp, 1.0), (x0, -1.0), (x1, -2.0)], ComparisonOp::Le, 0.0);
        budget.push((xp, c.a(p)));
    }
    lp.add_constraint(&budget, ComparisonOp::Le, 1.0);
    lp.solve().unwrap().objective()
}

/// (closed-form, oracle) for min and max of one truncated instance.
pub fn compare(c: &LpCoefficients<f64>) -> [(f64, f64); 2] {
    let min = lp_min(c).unwrap().value;
    let max = lp_max(c).unwrap().value;
    [
        (min, oracle(c, OptimizationDirection::Minimize)),
        (max, oracle(c, OptimizationDirection::Maximize)),
    ]
}

