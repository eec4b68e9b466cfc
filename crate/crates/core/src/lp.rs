//! Dense-tableau two-phase simplex over an exact field with Bland's rule.
//!
//! Every optimal solve returns a dual solution and the whole certificate
//! (primal feasibility, dual feasibility, complementary slackness, equal
//! objectives) is re-checked before the solution is handed out.

use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint<T> {
    pub coeffs: Vec<T>,
    pub relation: Relation,
    pub rhs: T,
}

/// `minimize objective·x` subject to the rows and `x ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram<T> {
    pub objective: Vec<T>,
    pub rows: Vec<Constraint<T>>,
}

impl<T: Field> LinearProgram<T> {
    pub fn new(objective: Vec<T>) -> Self {
        Self {
            objective,
            rows: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add(&mut self, coeffs: Vec<T>, relation: Relation, rhs: T) -> &mut Self {
        self.rows.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        self
    }
}

/// Optimal primal/dual pair. `dual[i]` belongs to `rows[i]`: nonnegative
/// for `>=`, nonpositive for `<=`, free for `=`.
#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution<T> {
    pub x: Vec<T>,
    pub objective: T,
    pub dual: Vec<T>,
    pub dual_objective: T,
    pub pivots: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LpError {
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("row {row} has {got} coefficients, expected {expected}")]
    Dimension {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("optimality certificate rejected: {0}")]
    Certificate(String),
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    num_cols: usize,
    pivots: usize,
}

impl<T: Field> Tableau<T> {
    fn rhs(&self, i: usize) -> &T {
        &self.rows[i][self.num_cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v = v.clone() / p.clone();
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = v.clone() - f.clone() * pv.clone();
                }
            }
        }
        self.basis[r] = c;
        self.pivots += 1;
    }

    fn reduced_costs(&self, cost: &[T]) -> Vec<T> {
        let mut r = cost.to_vec();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for (rj, a) in r.iter_mut().zip(row) {
                if !a.is_zero() {
                    *rj = rj.clone() - cb.clone() * a.clone();
                }
            }
        }
        r
    }

    /// Runs Bland's rule until optimal. Columns with `allowed[j] == false`
    /// never enter.
    fn optimize(&mut self, cost: &[T], allowed: &[bool]) -> Result<(), LpError> {
        loop {
            let r = self.reduced_costs(cost);
            let Some(enter) = (0..self.num_cols).find(|&j| allowed[j] && r[j].is_negative()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i).clone() / a.clone();
                let better = match &leave {
                    None => true,
                    Some((l, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((i, _)) => self.pivot(i, enter),
                None => return Err(LpError::Unbounded),
            }
        }
    }
}

pub fn simplex_solve<T: Field>(lp: &LinearProgram<T>) -> Result<LpSolution<T>, LpError> {
    let n = lp.num_vars();
    let m = lp.rows.len();
    for (i, row) in lp.rows.iter().enumerate() {
        if row.coeffs.len() != n {
            return Err(LpError::Dimension {
                row: i,
                expected: n,
                got: row.coeffs.len(),
            });
        }
    }

    // Normalize to rhs >= 0 and lay out columns:
    // [x | one slack/surplus per inequality | one artificial per >= or = row].
    let mut flipped = vec![false; m];
    let mut rel = Vec::with_capacity(m);
    for (i, row) in lp.rows.iter().enumerate() {
        let mut r = row.relation;
        if row.rhs.is_negative() {
            flipped[i] = true;
            r = match r {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        rel.push(r);
    }
    let num_slack = rel.iter().filter(|r| **r != Relation::Eq).count();
    let num_art = rel.iter().filter(|r| **r != Relation::Le).count();
    let num_cols = n + num_slack + num_art;
    let art_start = n + num_slack;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut unit_col = Vec::with_capacity(m);
    let (mut next_slack, mut next_art) = (n, art_start);
    for (i, row) in lp.rows.iter().enumerate() {
        let s = if flipped[i] { -T::one() } else { T::one() };
        let mut t = vec![T::zero(); num_cols + 1];
        for (j, a) in row.coeffs.iter().enumerate() {
            t[j] = a.clone() * s.clone();
        }
        t[num_cols] = row.rhs.clone() * s;
        match rel[i] {
            Relation::Le => {
                t[next_slack] = T::one();
                basis.push(next_slack);
                unit_col.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                t[next_slack] = -T::one();
                next_slack += 1;
                t[next_art] = T::one();
                basis.push(next_art);
                unit_col.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                t[next_art] = T::one();
                basis.push(next_art);
                unit_col.push(next_art);
                next_art += 1;
            }
        }
        rows.push(t);
    }
    let mut tab = Tableau {
        rows,
        basis,
        num_cols,
        pivots: 0,
    };

    if num_art > 0 {
        let cost1: Vec<T> = (0..num_cols)
            .map(|j| if j >= art_start { T::one() } else { T::zero() })
            .collect();
        let allowed = vec![true; num_cols];
        tab.optimize(&cost1, &allowed)?;
        let infeasibility = (0..m)
            .filter(|&i| tab.basis[i] >= art_start)
            .fold(T::zero(), |acc, i| acc + tab.rhs(i).clone());
        if infeasibility.is_positive() {
            return Err(LpError::Infeasible);
        }
        // Drive zero-level artificials out of the basis; rows with no
        // structural entry are redundant and keep their artificial at zero.
        for i in 0..m {
            if tab.basis[i] >= art_start {
                if let Some(j) = (0..art_start).find(|&j| !tab.rows[i][j].is_zero()) {
                    tab.pivot(i, j);
                }
            }
        }
    }

    let cost2: Vec<T> = (0..num_cols)
        .map(|j| {
            if j < n {
                lp.objective[j].clone()
            } else {
                T::zero()
            }
        })
        .collect();
    let allowed: Vec<bool> = (0..num_cols).map(|j| j < art_start).collect();
    tab.optimize(&cost2, &allowed)?;

    let mut x = vec![T::zero(); n];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < n {
            x[b] = tab.rhs(i).clone();
        }
    }
    let dual: Vec<T> = (0..m)
        .map(|i| {
            let col = unit_col[i];
            let y = (0..m).fold(T::zero(), |acc, k| {
                acc + cost2[tab.basis[k]].clone() * tab.rows[k][col].clone()
            });
            if flipped[i] {
                -y
            } else {
                y
            }
        })
        .collect();
    let objective = dot(&lp.objective, &x);
    let dual_objective = lp
        .rows
        .iter()
        .zip(&dual)
        .fold(T::zero(), |acc, (r, y)| acc + r.rhs.clone() * y.clone());
    let sol = LpSolution {
        x,
        objective,
        dual,
        dual_objective,
        pivots: tab.pivots,
    };
    verify_optimality(lp, &sol)?;
    Ok(sol)
}

fn dot<T: Field>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .filter(|(u, v)| !u.is_zero() && !v.is_zero())
        .fold(T::zero(), |acc, (u, v)| acc + u.clone() * v.clone())
}

/// Exact optimality check of a primal/dual pair.
pub fn verify_optimality<T: Field>(
    lp: &LinearProgram<T>,
    sol: &LpSolution<T>,
) -> Result<(), LpError> {
    let fail = |msg: String| Err(LpError::Certificate(msg));
    let n = lp.num_vars();
    if sol.x.len() != n || sol.dual.len() != lp.rows.len() {
        return fail("solution has the wrong shape".into());
    }
    if let Some(j) = (0..n).find(|&j| sol.x[j].is_negative()) {
        return fail(format!("x[{j}] is negative"));
    }
    let mut reduced = lp.objective.clone();
    for (i, (row, y)) in lp.rows.iter().zip(&sol.dual).enumerate() {
        let lhs = dot(&row.coeffs, &sol.x);
        let slack = lhs - row.rhs.clone();
        let primal_ok = match row.relation {
            Relation::Le => !slack.is_positive(),
            Relation::Ge => !slack.is_negative(),
            Relation::Eq => slack.is_zero(),
        };
        if !primal_ok {
            return fail(format!("row {i} is violated"));
        }
        let sign_ok = match row.relation {
            Relation::Le => !y.is_positive(),
            Relation::Ge => !y.is_negative(),
            Relation::Eq => true,
        };
        if !sign_ok {
            return fail(format!("dual value of row {i} has the wrong sign"));
        }
        if !(y.clone() * slack).is_zero() {
            return fail(format!("complementary slackness fails on row {i}"));
        }
        if !y.is_zero() {
            for (rj, a) in reduced.iter_mut().zip(&row.coeffs) {
                if !a.is_zero() {
                    *rj = rj.clone() - a.clone() * y.clone();
                }
            }
        }
    }
    for j in 0..n {
        if reduced[j].is_negative() {
            return fail(format!("dual constraint of x[{j}] is violated"));
        }
        if !(reduced[j].clone() * sol.x[j].clone()).is_zero() {
            return fail(format!("complementary slackness fails on x[{j}]"));
        }
    }
    if sol.objective != dot(&lp.objective, &sol.x) {
        return fail("reported objective differs from c·x".into());
    }
    let by = lp
        .rows
        .iter()
        .zip(&sol.dual)
        .fold(T::zero(), |acc, (r, y)| acc + r.rhs.clone() * y.clone());
    if sol.dual_objective != by || sol.objective != by {
        return fail("primal and dual objectives differ".into());
    }
    Ok(())
}
