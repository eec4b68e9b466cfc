//! Bitmask subsets of a labelled ground set and the superset/subset sum
//! transforms over the subset lattice.
//!
//! Bit `i` of a mask stands for `labels[i]`.

use rayon::prelude::*;

use crate::scalar::Scalar;

/// Largest ground set for which dense `2^n` tables are allowed.
pub const MAX_DENSE: usize = 20;

// Below this table length the butterflies run sequentially.
const PAR_THRESHOLD: usize = 1 << 14;

#[inline]
pub fn size(mask: usize) -> u32 {
    mask.count_ones()
}

#[inline]
pub fn is_subset(a: usize, b: usize) -> bool {
    a & !b == 0
}

#[inline]
pub fn full(n: usize) -> usize {
    (1usize << n) - 1
}

/// All submasks of `mask`, in decreasing order, including `mask` and 0.
pub fn submasks(mask: usize) -> impl Iterator<Item = usize> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & mask)
        };
        Some(cur)
    })
}

/// All supersets of `mask` inside `full`, in increasing order.
pub fn supermasks(mask: usize, full: usize) -> impl Iterator<Item = usize> {
    let free = full & !mask;
    let mut subs: Vec<usize> = submasks(free).collect();
    subs.reverse();
    subs.into_iter().map(move |s| s | mask)
}

fn butterfly<T: Scalar>(xs: &mut [T], op: impl Fn(&mut T, &mut T) + Sync) {
    let len = xs.len();
    assert!(len.is_power_of_two(), "table length must be a power of two");
    let mut bit = 1;
    while bit < len {
        let apply = |block: &mut [T]| {
            let (lo, hi) = block.split_at_mut(bit);
            for (z, o) in lo.iter_mut().zip(hi) {
                op(z, o);
            }
        };
        if len >= PAR_THRESHOLD {
            xs.par_chunks_mut(2 * bit).for_each(apply);
        } else {
            xs.chunks_mut(2 * bit).for_each(apply);
        }
        bit <<= 1;
    }
}

/// `xs[A] <- Σ_{B ⊇ A} xs[B]`.
pub fn superset_sums<T: Scalar>(xs: &mut [T]) {
    butterfly(xs, |z, o| *z = z.clone() + o.clone());
}

/// Inverse of [`superset_sums`].
pub fn inv_superset_sums<T: Scalar>(xs: &mut [T]) {
    butterfly(xs, |z, o| *z = z.clone() - o.clone());
}

/// `xs[A] <- Σ_{B ⊆ A} xs[B]`.
pub fn subset_sums<T: Scalar>(xs: &mut [T]) {
    butterfly(xs, |z, o| *o = o.clone() + z.clone());
}

/// Comma-joined labels of the members of `mask`, in label order.
pub fn key(labels: &[String], mask: usize) -> String {
    members(mask)
        .map(|i| labels[i].as_str())
        .collect::<Vec<_>>()
        .join(",")
}

/// Indices of the set bits, increasing.
pub fn members(mask: usize) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(i)
    })
}

/// Bitmask of a list of labels. Unknown names are returned as `Err`.
pub fn mask_of<'a>(
    labels: &[String],
    names: impl IntoIterator<Item = &'a str>,
) -> Result<usize, String> {
    let mut mask = 0;
    for name in names {
        let name = name.trim();
        match labels.iter().position(|l| l == name) {
            Some(i) => mask |= 1 << i,
            None => return Err(name.to_string()),
        }
    }
    Ok(mask)
}
