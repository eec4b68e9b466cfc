//! Independent oracles and random generators shared by the integration
//! tests. Everything here is written from the definitions with plain loops
//! and does not call the fast routines it is used to check.
#![allow(dead_code)]

use divkit::geometry::PointConfiguration;
use divkit::l1cone::CutCombination;
use divkit::{default_labels, Diversity};
use num::{BigInt, BigRational, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(p: i64, d: i64) -> Q {
    BigRational::new(p.into(), d.into())
}

pub fn labels(n: usize) -> Vec<String> {
    default_labels(n)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn popcount(x: usize) -> u32 {
    x.count_ones()
}

fn contains(big: usize, small: usize) -> bool {
    big & small == small
}

/// Nonnegative rational `p/q` with `p < num`, `1 ≤ q ≤ den`.
pub fn rand_q(rng: &mut impl Rng, num: i64, den: i64) -> Q {
    q(rng.gen_range(0..num), rng.gen_range(1..=den))
}

pub fn rand_signed_q(rng: &mut impl Rng, num: i64, den: i64) -> Q {
    q(rng.gen_range(-num + 1..num), rng.gen_range(1..=den))
}

/// `λ_A = Σ_{B ⊇ A} (-1)^{|A|+|B|+1} δ(B)`, summed directly.
pub fn naive_lambda(table: &[Q]) -> Vec<Q> {
    let size = table.len();
    (0..size)
        .map(|a| {
            let mut s = Q::zero();
            for (b, v) in table.iter().enumerate() {
                if contains(b, a) {
                    if (popcount(a) + popcount(b) + 1).is_multiple_of(2) {
                        s += v;
                    } else {
                        s -= v;
                    }
                }
            }
            s
        })
        .collect()
}

/// `δ(A) = -Σ_{B ⊇ A} λ_B`, summed directly.
pub fn naive_delta(lam: &[Q]) -> Vec<Q> {
    let size = lam.len();
    (0..size)
        .map(|a| {
            let mut s = Q::zero();
            for (b, v) in lam.iter().enumerate() {
                if contains(b, a) {
                    s -= v;
                }
            }
            s
        })
        .collect()
}

/// `Σ_{A,B} x_A x_B φ(A ∪ B)`.
pub fn naive_form(phi: &[Q], x: &[Q]) -> Q {
    let mut s = Q::zero();
    for a in 0..x.len() {
        if x[a].is_zero() {
            continue;
        }
        for b in 0..x.len() {
            s += &x[a] * &x[b] * &phi[a | b];
        }
    }
    s
}

/// Random vector on `𝒫(X)` with `x_∅ = 0` and `Σ x_A = 0`.
pub fn random_zero_sum(rng: &mut impl Rng, n: usize) -> Vec<Q> {
    let size = 1usize << n;
    let mut x: Vec<Q> = (0..size).map(|_| rand_signed_q(rng, 6, 3)).collect();
    x[0] = Q::zero();
    let last = size - 1;
    let rest: Q = x[..last].iter().sum();
    x[last] = -rest;
    x
}

/// A negative-type diversity drawn through its λ vector: `λ_C ≥ 0` on proper
/// nonempty sets (singletons topped up so every point has the same mass),
/// then `δ(A) = -Σ_{B ⊇ A} λ_B` with `λ_X`, `λ_∅` fixed by `δ = 0` on points
/// and on `∅`.
pub fn sample_negative_type(rng: &mut impl Rng, n: usize) -> (Diversity, Vec<Q>) {
    sample_from_lambda(rng, n, false)
}

/// Like [`sample_negative_type`] with `λ_C ≥ 1/4` on every proper nonempty
/// `C`, so the quadratic form is strictly negative on zero-sum vectors.
pub fn sample_strict_negative_type(rng: &mut impl Rng, n: usize) -> (Diversity, Vec<Q>) {
    sample_from_lambda(rng, n, true)
}

fn sample_from_lambda(rng: &mut impl Rng, n: usize, strict: bool) -> (Diversity, Vec<Q>) {
    let size = 1usize << n;
    let full = size - 1;
    let mut lam: Vec<Q> = vec![Q::zero(); size];
    for l in lam.iter_mut().take(full).skip(1) {
        if strict {
            *l = rand_q(rng, 5, 4) + q(1, 4);
        } else if rng.gen_bool(0.6) {
            *l = rand_q(rng, 5, 4);
        }
    }
    let mass = |lam: &[Q], i: usize| -> Q {
        (1..full)
            .filter(|c| c >> i & 1 == 1)
            .map(|c| lam[c].clone())
            .sum()
    };
    let masses: Vec<Q> = (0..n).map(|i| mass(&lam, i)).collect();
    let top = masses.iter().max().cloned().unwrap_or_else(Q::zero);
    if n >= 2 {
        for i in 0..n {
            lam[1 << i] += &top - &masses[i];
        }
    }
    let s = if n >= 2 { top } else { Q::zero() };
    lam[full] = -s;
    let rest: Q = lam[1..].iter().sum();
    lam[0] = -rest;
    let table = naive_delta(&lam);
    (Diversity::from_table(labels(n), table).unwrap(), lam)
}

/// Random rational points in `dim` dimensions.
pub fn random_points(rng: &mut impl Rng, n: usize, dim: usize) -> PointConfiguration {
    let pts = (0..n)
        .map(|_| (0..dim).map(|_| rand_signed_q(rng, 7, 3)).collect())
        .collect();
    PointConfiguration::new(dim, labels(n), pts).unwrap()
}

/// `Σ_i max_{a∈A} a_i - min_{a∈A} Σ_i a_i`, from the definition.
pub fn naive_delta_neg(points: &[Vec<Q>], a: usize) -> Q {
    let members: Vec<&Vec<Q>> = points
        .iter()
        .enumerate()
        .filter(|(i, _)| a >> i & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    if members.is_empty() {
        return Q::zero();
    }
    let dim = members[0].len();
    let mut s = Q::zero();
    for k in 0..dim {
        s += members.iter().map(|p| p[k].clone()).max().unwrap();
    }
    s - members.iter().map(|p| p.iter().sum::<Q>()).min().unwrap()
}

/// Diameter diversity of random integer points under the l1 metric.
pub fn diameter_diversity(rng: &mut impl Rng, n: usize) -> Diversity {
    let pts: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..3).map(|_| rng.gen_range(-4..5)).collect())
        .collect();
    let dist = |i: usize, j: usize| -> i64 {
        pts[i].iter().zip(&pts[j]).map(|(x, y)| (x - y).abs()).sum()
    };
    Diversity::from_fn(labels(n), |a| {
        let mut best = 0;
        for i in 0..n {
            for j in 0..n {
                if a >> i & 1 == 1 && a >> j & 1 == 1 {
                    best = best.max(dist(i, j));
                }
            }
        }
        q(best, 1)
    })
    .unwrap()
}

/// A random diversity: δ_neg of random points, a diameter diversity, or a
/// random cut combination, chosen uniformly.
pub fn random_diversity(rng: &mut impl Rng, n: usize) -> Diversity {
    match rng.gen_range(0..3) {
        0 => {
            let dim = rng.gen_range(1..=3);
            let p = random_points(rng, n, dim);
            let table = (0..1usize << n)
                .map(|a| naive_delta_neg(p.points(), a))
                .collect();
            Diversity::from_table(labels(n), table).unwrap()
        }
        1 => diameter_diversity(rng, n),
        _ => {
            let comb = random_cut_combination(rng, n);
            Diversity::from_table(labels(n), naive_combination(n, &comb)).unwrap()
        }
    }
}

pub fn random_cut_combination(rng: &mut impl Rng, n: usize) -> CutCombination {
    let k = CutCombination::<Q>::num_cuts(n);
    let weights = (0..k)
        .map(|_| {
            if rng.gen_bool(0.5) {
                rand_q(rng, 6, 3)
            } else {
                Q::zero()
            }
        })
        .collect();
    CutCombination::from_weights(labels(n), weights).unwrap()
}

/// `Σ_C w_C [A meets both C and its complement]`, summed directly.
pub fn naive_combination(n: usize, comb: &CutCombination) -> Vec<Q> {
    let full = (1usize << n) - 1;
    (0..=full)
        .map(|a| {
            let mut s = Q::zero();
            for side in 1..full {
                let w = comb.weight(side);
                // each unordered cut is visited once through its side without label 0
                if side & 1 == 0 && a & side != 0 && a & !side & full != 0 {
                    s += w;
                }
            }
            s
        })
        .collect()
}

pub fn all_ones(n: usize) -> Diversity {
    Diversity::from_fn(labels(n), |a| {
        if popcount(a) >= 2 {
            Q::one()
        } else {
            Q::zero()
        }
    })
    .unwrap()
}

/// `δ(A) = ⌈|A|/2⌉` on sets with at least two points.
pub fn ceil_half(n: usize) -> Diversity {
    Diversity::from_fn(labels(n), |a| {
        let k = popcount(a) as i64;
        if k >= 2 {
            q((k + 1) / 2, 1)
        } else {
            Q::zero()
        }
    })
    .unwrap()
}

/// Minimum of `obj·x` over `{x : A x ≤ b}` by exhaustive enumeration of
/// basic solutions. Only for tiny programs with a bounded optimum.
pub fn vertex_min(obj: &[Q], rows: &[(Vec<Q>, Q)]) -> Option<(Q, Vec<Q>)> {
    let nv = obj.len();
    let mut best: Option<(Q, Vec<Q>)> = None;
    let mut pick = Vec::new();
    choose(rows.len(), nv, 0, &mut pick, &mut |idx| {
        let a: Vec<Vec<Q>> = idx.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vec<Q> = idx.iter().map(|&i| rows[i].1.clone()).collect();
        if let Some(x) = solve_square(a, b) {
            let feasible = rows.iter().all(|(r, rhs)| dot(r, &x) <= *rhs);
            if feasible {
                let v = dot(obj, &x);
                if best.as_ref().is_none_or(|(bv, _)| v < *bv) {
                    best = Some((v, x));
                }
            }
        }
    });
    best
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn choose(n: usize, k: usize, start: usize, pick: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for i in start..n {
        pick.push(i);
        choose(n, k, i + 1, pick, f);
        pick.pop();
    }
}

/// Gauss-Jordan over the rationals; `None` when singular.
pub fn solve_square(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v = &*v / &p;
        }
        b[col] = &b[col] / &p;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
                let t = &f * &b[col];
                b[r] -= t;
            }
        }
    }
    Some(b)
}

/// Distortion LP of a diversity, written out directly in `A x ≤ b` form with
/// variables `(y_cut…, c)` and `x ≥ 0` rows.
pub fn naive_distortion_rows(d: &Diversity) -> (Vec<Q>, Vec<(Vec<Q>, Q)>) {
    let n = d.n();
    let full = (1usize << n) - 1;
    let cuts: Vec<usize> = (1..full).filter(|s| s & 1 == 0).collect();
    let nv = cuts.len() + 1;
    let mut rows = Vec::new();
    for a in 0..=full {
        if popcount(a) < 2 {
            continue;
        }
        let sep: Vec<Q> = cuts
            .iter()
            .map(|&s| {
                if a & s != 0 && a & !s & full != 0 {
                    Q::one()
                } else {
                    Q::zero()
                }
            })
            .collect();
        let da = d.value(a).clone();
        // -Σ y δ_C(A) ≤ -δ(A)
        let mut lo: Vec<Q> = sep.iter().map(|v| -v.clone()).collect();
        lo.push(Q::zero());
        rows.push((lo, -da.clone()));
        // Σ y δ_C(A) - c δ(A) ≤ 0
        let mut hi = sep.clone();
        hi.push(-da);
        rows.push((hi, Q::zero()));
    }
    for i in 0..nv {
        let mut r = vec![Q::zero(); nv];
        r[i] = -Q::one();
        rows.push((r, Q::zero()));
    }
    // c ≥ 1, binding only when δ vanishes identically
    let mut r = vec![Q::zero(); nv];
    r[nv - 1] = -Q::one();
    rows.push((r, -Q::one()));
    let mut obj = vec![Q::zero(); nv];
    obj[nv - 1] = Q::one();
    (obj, rows)
}

/// `k`-subsets of `{1..n}` as sorted element lists, in colex order.
pub fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    let mut pick = Vec::new();
    choose(n, k, 0, &mut pick, &mut |idx| {
        all.push(idx.iter().map(|i| i + 1).collect::<Vec<_>>())
    });
    all.sort_by(|a: &Vec<usize>, b: &Vec<usize>| a.iter().rev().cmp(b.iter().rev()));
    all
}

/// `|∪𝒜| - m` from element lists.
pub fn naive_delta_h(m: usize, family: &[&Vec<usize>]) -> i64 {
    if family.is_empty() {
        return 0;
    }
    let mut union: Vec<usize> = family.iter().flat_map(|s| s.iter().copied()).collect();
    union.sort_unstable();
    union.dedup();
    union.len() as i64 - m as i64
}

/// `(|Int|, |Ext|, |∂|)` of `U` (a mask over the colex list of `m`-sets),
/// computed from the sets `B ∖ {i}`.
pub fn naive_boundary_counts(m: usize, u: u64) -> (usize, usize, usize) {
    let ground = colex_subsets(2 * m, m);
    let upper = colex_subsets(2 * m, m + 1);
    let inside = |s: &Vec<usize>| {
        let pos = ground.iter().position(|g| g == s).unwrap();
        u >> pos & 1 == 1
    };
    let (mut int, mut ext, mut bd) = (0, 0, 0);
    for b in &upper {
        let hits = (0..b.len())
            .filter(|&i| {
                let mut s = b.clone();
                s.remove(i);
                inside(&s)
            })
            .count();
        if hits == b.len() {
            int += 1;
        } else if hits == 0 {
            ext += 1;
        } else {
            bd += 1;
        }
    }
    (int, ext, bd)
}

pub fn binom(n: u64, k: u64) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

pub fn is_nonneg(x: &Q) -> bool {
    !x.is_negative()
}

pub fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// CLI invocations with checked-in expected stdout. Data file names are
/// resolved through [`data`]; `@name` marks a file argument.
pub const CLI_CASES: &[(&str, &[&str])] = &[
    ("check_allones3", &["check", "@allones3.json"]),
    (
        "check_allones3_require_l1",
        &["check", "--require-l1", "@allones3.json"],
    ),
    (
        "check_allones3_naive",
        &["check", "--mode", "naive", "@allones3.json"],
    ),
    (
        "check_ceil4",
        &["check", "--require-negative", "@ceil4.json"],
    ),
    ("check_cut4", &["check", "--require-l1", "@cut4.json"]),
    ("check_notdiv3", &["check", "@notdiv3.json"]),
    ("lambda_ceil4", &["lambda", "@ceil4.json"]),
    ("lambda_allones3", &["lambda", "@allones3.json"]),
    ("embed_allones3", &["embed", "--verify", "@allones3.json"]),
    ("embed_ceil4", &["embed", "@ceil4.json"]),
    ("induced_allones3", &["induced", "@allones3.json"]),
    ("induced_cut4", &["induced", "@cut4.json"]),
    ("distort_allones3", &["distort", "@allones3.json"]),
    (
        "distort_allones3_lp",
        &["distort", "--lp", "@allones3.json"],
    ),
    ("distort_cut4", &["distort", "@cut4.json"]),
    ("deltaneg_points3", &["deltaneg", "@points3.json"]),
    (
        "hypergraph_m2_all",
        &[
            "hypergraph",
            "--m",
            "2",
            "--bounds",
            "--aggregates",
            "--sparsity",
            "--expansion",
        ],
    ),
    ("hypergraph_m2_emit", &["hypergraph", "--m", "2", "--emit"]),
    (
        "hypergraph_m3_reports",
        &[
            "hypergraph",
            "--m",
            "3",
            "--bounds",
            "--aggregates",
            "--sparsity",
            "--expansion",
        ],
    ),
];

/// Expands `@name` arguments and prepends the program name and thread count.
pub fn cli_argv(args: &[&str], threads: usize) -> Vec<String> {
    let mut v = vec![
        "divkit".to_string(),
        "--threads".to_string(),
        threads.to_string(),
    ];
    v.extend(args.iter().map(|a| match a.strip_prefix('@') {
        Some(name) => data(name),
        None => a.to_string(),
    }));
    v
}

pub fn golden_path(name: &str) -> String {
    format!("{}/tests/golden/{name}.out", env!("CARGO_MANIFEST_DIR"))
}

/// `exit=<code>` line followed by stdout.
pub fn golden_text(code: i32, stdout: &str) -> String {
    format!("exit={code}\n{stdout}")
}
