//! Exact linear programming.
//!
//! Dense two-phase tableau simplex over `Rational` with Bland's
//! smallest-index rule, so degenerate instances terminate and repeated solves
//! pivot identically. Problems are stated as maximization; variables are free
//! unless bounds are given.

use crate::error::{Error, Result};
use crate::kernel::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
    pub lower: Vec<Option<Rational>>,
    pub upper: Vec<Option<Rational>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct LpResult {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub point: Option<Vec<Rational>>,
}

impl LpResult {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

impl LinearProgram {
    /// Feasibility-only program over `n` free variables.
    pub fn new(n: usize) -> Self {
        LinearProgram {
            objective: vec![Rational::zero(); n],
            constraints: Vec::new(),
            lower: vec![None; n],
            upper: vec![None; n],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn maximize(mut self, objective: Vec<Rational>) -> Self {
        self.objective = objective;
        self
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn with_constraint(mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        self.add_constraint(coeffs, relation, rhs);
        self
    }

    pub fn set_bounds(&mut self, var: usize, lower: Option<Rational>, upper: Option<Rational>) {
        self.lower[var] = lower;
        self.upper[var] = upper;
    }

    pub fn nonnegative(mut self) -> Self {
        for l in &mut self.lower {
            *l = Some(Rational::zero());
        }
        self
    }

    fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        if self.lower.len() != n || self.upper.len() != n {
            return Err(Error::Malformed("bound vectors must match objective length".into()));
        }
        for c in &self.constraints {
            if c.coeffs.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: c.coeffs.len(),
                });
            }
        }
        Ok(())
    }

    /// True iff `x` satisfies every constraint and bound exactly.
    pub fn is_feasible_point(&self, x: &[Rational]) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        let bounds_ok = x.iter().enumerate().all(|(j, v)| {
            self.lower[j].as_ref().is_none_or(|l| v >= l) && self.upper[j].as_ref().is_none_or(|u| v <= u)
        });
        bounds_ok
            && self.constraints.iter().all(|c| {
                let lhs: Rational = c.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                }
            })
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }
}

/// How an original variable is expressed through nonnegative columns.
enum VarMap {
    /// x = offset + y
    Shifted { col: usize, offset: Rational },
    /// x = offset - y
    Mirrored { col: usize, offset: Rational },
    /// x = y+ - y-
    Split { pos: usize, neg: usize },
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize, objective: &mut [Rational]) {
        let inv = self.rows[r][c].recip().expect("nonzero pivot");
        for v in self.rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = &*v - &(&f * p);
                }
            }
        }
        if !objective[c].is_zero() {
            let f = objective[c].clone();
            for (v, p) in objective.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = &*v - &(&f * p);
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes with reduced-cost row `objective` (last entry holds -value).
    /// Columns with `allowed[c] == false` never enter.
    fn run(&mut self, objective: &mut [Rational], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.width).find(|&c| allowed[c] && objective[c].is_positive());
            let Some(c) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &best {
                    None => true,
                    Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c, objective),
            }
        }
    }
}

pub fn solve_lp_exact(lp: &LinearProgram) -> Result<LpResult> {
    lp.validate()?;
    let n = lp.num_vars();

    // Map original variables onto nonnegative columns.
    let mut maps = Vec::with_capacity(n);
    let mut ncols = 0;
    let mut extra_rows: Vec<(usize, Rational)> = Vec::new();
    for j in 0..n {
        match (&lp.lower[j], &lp.upper[j]) {
            (Some(l), u) => {
                if let Some(u) = u {
                    if u < l {
                        return Ok(LpResult {
                            status: LpStatus::Infeasible,
                            value: None,
                            point: None,
                        });
                    }
                    extra_rows.push((ncols, u - l));
                }
                maps.push(VarMap::Shifted {
                    col: ncols,
                    offset: l.clone(),
                });
                ncols += 1;
            }
            (None, Some(u)) => {
                maps.push(VarMap::Mirrored {
                    col: ncols,
                    offset: u.clone(),
                });
                ncols += 1;
            }
            (None, None) => {
                maps.push(VarMap::Split {
                    pos: ncols,
                    neg: ncols + 1,
                });
                ncols += 2;
            }
        }
    }

    // Rows over the structural columns: (coeffs, relation, rhs).
    let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = Vec::new();
    for c in &lp.constraints {
        let mut coeffs = vec![Rational::zero(); ncols];
        let mut rhs = c.rhs.clone();
        for (j, a) in c.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            match &maps[j] {
                VarMap::Shifted { col, offset } => {
                    coeffs[*col] += a;
                    rhs -= &(a * offset);
                }
                VarMap::Mirrored { col, offset } => {
                    coeffs[*col] -= a;
                    rhs -= &(a * offset);
                }
                VarMap::Split { pos, neg } => {
                    coeffs[*pos] += a;
                    coeffs[*neg] -= a;
                }
            }
        }
        rows.push((coeffs, c.relation, rhs));
    }
    for (col, width) in extra_rows {
        let mut coeffs = vec![Rational::zero(); ncols];
        coeffs[col] = Rational::one();
        rows.push((coeffs, Relation::Le, width));
    }
    for row in &mut rows {
        if row.2.is_negative() {
            for v in &mut row.0 {
                *v = -&*v;
            }
            row.2 = -&row.2;
            row.1 = match row.1 {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }

    let m = rows.len();
    let n_slack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let n_art = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let width = ncols + n_slack + n_art;
    let art_start = ncols + n_slack;

    let mut tab = Tableau {
        rows: Vec::with_capacity(m),
        basis: Vec::with_capacity(m),
        width,
    };
    let mut next_slack = ncols;
    let mut next_art = art_start;
    for (coeffs, rel, rhs) in &rows {
        let mut row = vec![Rational::zero(); width + 1];
        row[..ncols].clone_from_slice(coeffs);
        row[width] = rhs.clone();
        match rel {
            Relation::Le => {
                row[next_slack] = Rational::one();
                tab.basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = Rational::from(-1);
                next_slack += 1;
                row[next_art] = Rational::one();
                tab.basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = Rational::one();
                tab.basis.push(next_art);
                next_art += 1;
            }
        }
        tab.rows.push(row);
    }

    // Phase 1: maximize -(sum of artificials).
    if n_art > 0 {
        let mut obj = vec![Rational::zero(); width + 1];
        for (r, row) in tab.rows.iter().enumerate() {
            if tab.basis[r] >= art_start {
                for (o, v) in obj.iter_mut().zip(row) {
                    *o += v;
                }
            }
        }
        for o in obj.iter_mut().take(width).skip(art_start) {
            *o = Rational::zero();
        }
        let allowed = vec![true; width];
        tab.run(&mut obj, &allowed);
        // obj[width] = sum of artificial values remaining.
        if !obj[width].is_zero() {
            return Ok(LpResult {
                status: LpStatus::Infeasible,
                value: None,
                point: None,
            });
        }
        // Drive zero-valued artificials out of the basis; drop redundant rows.
        let mut r = 0;
        while r < tab.rows.len() {
            if tab.basis[r] >= art_start {
                match (0..art_start).find(|&c| !tab.rows[r][c].is_zero()) {
                    Some(c) => {
                        let mut dummy = vec![Rational::zero(); width + 1];
                        tab.pivot(r, c, &mut dummy);
                    }
                    None => {
                        tab.rows.remove(r);
                        tab.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }

    // Phase 2 objective in column space.
    let mut cost = vec![Rational::zero(); width + 1];
    let mut constant = Rational::zero();
    for (j, c) in lp.objective.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        match &maps[j] {
            VarMap::Shifted { col, offset } => {
                cost[*col] += c;
                constant += &(c * offset);
            }
            VarMap::Mirrored { col, offset } => {
                cost[*col] -= c;
                constant += &(c * offset);
            }
            VarMap::Split { pos, neg } => {
                cost[*pos] += c;
                cost[*neg] -= c;
            }
        }
    }
    // Reduce against the current basis.
    let mut obj = cost.clone();
    for (r, row) in tab.rows.iter().enumerate() {
        let cb = cost[tab.basis[r]].clone();
        if cb.is_zero() {
            continue;
        }
        for (o, v) in obj.iter_mut().zip(row) {
            *o -= &(&cb * v);
        }
    }
    let allowed: Vec<bool> = (0..width).map(|c| c < art_start).collect();
    if !tab.run(&mut obj, &allowed) {
        return Ok(LpResult {
            status: LpStatus::Unbounded,
            value: None,
            point: None,
        });
    }

    let mut y = vec![Rational::zero(); width];
    for (r, &b) in tab.basis.iter().enumerate() {
        y[b] = tab.rhs(r).clone();
    }
    let x: Vec<Rational> = maps
        .iter()
        .map(|m| match m {
            VarMap::Shifted { col, offset } => offset + &y[*col],
            VarMap::Mirrored { col, offset } => offset - &y[*col],
            VarMap::Split { pos, neg } => &y[*pos] - &y[*neg],
        })
        .collect();
    let value = lp.objective_value(&x);
    debug_assert_eq!(value, -&obj[width] + &constant);
    if !lp.is_feasible_point(&x) {
        return Err(Error::Inconsistent("simplex witness violates a constraint".into()));
    }
    Ok(LpResult {
        status: LpStatus::Optimal,
        value: Some(value),
        point: Some(x),
    })
}

/// Whether the constraint system has any solution.
pub fn is_feasible(lp: &LinearProgram) -> Result<bool> {
    let probe = LinearProgram {
        objective: vec![Rational::zero(); lp.num_vars()],
        ..lp.clone()
    };
    Ok(solve_lp_exact(&probe)?.status == LpStatus::Optimal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn tight_single_constraint() {
        let lp = LinearProgram::new(2)
            .maximize(vec![q(1), q(1)])
            .with_constraint(vec![q(1), q(1)], Relation::Le, q(1))
            .nonnegative();
        let res = solve_lp_exact(&lp).unwrap();
        assert_eq!(res.status, LpStatus::Optimal);
        assert_eq!(res.value, Some(q(1)));
        assert!(lp.is_feasible_point(res.point.as_ref().unwrap()));
    }

    #[test]
    fn contradictory_bounds_are_infeasible() {
        let lp = LinearProgram::new(1)
            .maximize(vec![q(1)])
            .with_constraint(vec![q(1)], Relation::Ge, q(2))
            .with_constraint(vec![q(1)], Relation::Le, q(1));
        assert_eq!(solve_lp_exact(&lp).unwrap().status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_direction() {
        let lp = LinearProgram::new(2)
            .maximize(vec![q(1), q(0)])
            .with_constraint(vec![q(0), q(1)], Relation::Le, q(3));
        assert_eq!(solve_lp_exact(&lp).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn equality_rows_and_negative_rhs() {
        // max -x - y, x + y = -2, x >= -3, y <= 5  ->  value 2
        let mut lp = LinearProgram::new(2)
            .maximize(vec![q(-1), q(-1)])
            .with_constraint(vec![q(1), q(1)], Relation::Eq, q(-2));
        lp.set_bounds(0, Some(q(-3)), None);
        lp.set_bounds(1, None, Some(q(5)));
        let res = solve_lp_exact(&lp).unwrap();
        assert_eq!(res.value, Some(q(2)));
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        let lp = LinearProgram::new(2)
            .maximize(vec![q(1), q(0)])
            .with_constraint(vec![q(1), q(1)], Relation::Eq, q(1))
            .with_constraint(vec![q(2), q(2)], Relation::Eq, q(2))
            .nonnegative();
        let res = solve_lp_exact(&lp).unwrap();
        assert_eq!(res.value, Some(q(1)));
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's classic cycling instance; Bland's rule must terminate.
        let lp = LinearProgram::new(4)
            .maximize(vec![Rational::frac(3, 4), q(-150), Rational::frac(1, 50), q(-6)])
            .with_constraint(vec![Rational::frac(1, 4), q(-60), Rational::frac(-1, 25), q(9)], Relation::Le, q(0))
            .with_constraint(vec![Rational::frac(1, 2), q(-90), Rational::frac(-1, 50), q(3)], Relation::Le, q(0))
            .with_constraint(vec![q(0), q(0), q(1), q(0)], Relation::Le, q(1))
            .nonnegative();
        let res = solve_lp_exact(&lp).unwrap();
        assert_eq!(res.value, Some(Rational::frac(1, 20)));
    }

    #[test]
    fn malformed_dimensions() {
        let lp = LinearProgram::new(2).with_constraint(vec![q(1)], Relation::Le, q(0));
        assert!(matches!(solve_lp_exact(&lp), Err(Error::DimensionMismatch { .. })));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

        #[test]
        fn strong_duality(
            a in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 3), 3),
            b in proptest::collection::vec(0i64..=6, 3),
            c in proptest::collection::vec(-4i64..=4, 3),
        ) {
            let mut primal = LinearProgram::new(3).nonnegative().maximize(c.iter().map(|&x| q(x)).collect());
            let mut dual = LinearProgram::new(3)
                .nonnegative()
                .maximize(b.iter().map(|&x| q(-x)).collect());
            for i in 0..3 {
                primal.add_constraint(a[i].iter().map(|&x| q(x)).collect(), Relation::Le, q(b[i]));
                dual.add_constraint((0..3).map(|j| q(a[j][i])).collect(), Relation::Ge, q(c[i]));
            }
            let p = solve_lp_exact(&primal).unwrap();
            let d = solve_lp_exact(&dual).unwrap();
            match p.status {
                LpStatus::Optimal => {
                    proptest::prop_assert_eq!(d.status, LpStatus::Optimal);
                    proptest::prop_assert_eq!(p.value.clone().unwrap(), -d.value.unwrap());
                    proptest::prop_assert!(primal.is_feasible_point(&p.point.unwrap()));
                }
                LpStatus::Unbounded => proptest::prop_assert_eq!(d.status, LpStatus::Infeasible),
                LpStatus::Infeasible => proptest::prop_assert!(false, "x = 0 is feasible"),
            }
        }
    }
}
