//! Bitmask helpers for vertex subsets.
//!
//! A face is a `u64` whose bit `i` marks vertex `i`. Vertex indices are
//! zero-based internally and one-based in every printed label.

/// A subset of `0..n` stored as a bitmask.
pub type Face = u64;

/// Mask of all vertices of an `n`-vertex set.
#[inline]
pub fn full(n: usize) -> Face {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn card(x: Face) -> usize {
    x.count_ones() as usize
}

#[inline]
pub fn bit(i: usize) -> Face {
    1u64 << i
}

#[inline]
pub fn is_subset(a: Face, b: Face) -> bool {
    a & !b == 0
}

/// Builds a mask from zero-based indices.
pub fn from_indices(idx: &[usize]) -> Face {
    idx.iter().fold(0, |acc, &i| acc | bit(i))
}

/// Builds a mask from one-based vertex numbers, the convention of all fixtures.
pub fn from_one_based(idx: &[usize]) -> Face {
    idx.iter().fold(0, |acc, &i| acc | bit(i - 1))
}

/// Indices of the set bits, ascending.
pub fn indices(x: Face) -> impl Iterator<Item = usize> {
    let mut rest = x;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// All submasks of `x`, including `0` and `x` itself.
pub fn submasks(x: Face) -> impl Iterator<Item = Face> {
    let mut cur = Some(x);
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == 0 { None } else { Some((s - 1) & x) };
        Some(s)
    })
}

/// All `k`-element submasks of `x` in increasing numeric order.
pub fn k_subsets(x: Face, k: usize) -> Vec<Face> {
    let elems: Vec<usize> = indices(x).collect();
    let m = elems.len();
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    if k == m {
        out.push(x);
        return out;
    }
    // Gosper's hack over positions, then scatter into `x`.
    let mut pos: u64 = (1u64 << k) - 1;
    let limit: u128 = 1u128 << m;
    while (pos as u128) < limit {
        let mut f = 0;
        for j in indices(pos) {
            f |= bit(elems[j]);
        }
        out.push(f);
        let c = pos & pos.wrapping_neg();
        let r = pos + c;
        if r == 0 {
            break;
        }
        pos = (((r ^ pos) >> 2) / c) | r;
    }
    out.sort_unstable();
    out
}

/// All subsets of `0..n` with exactly `k` elements.
pub fn p_k(n: usize, k: usize) -> Vec<Face> {
    k_subsets(full(n), k)
}

/// Binomial coefficient, exact for the small arguments used here.
pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

/// Moves the bits of `x` selected by `keep` into consecutive low positions.
pub fn compress(x: Face, keep: Face) -> Face {
    let mut out = 0;
    for (j, i) in indices(keep).enumerate() {
        if x & bit(i) != 0 {
            out |= bit(j);
        }
    }
    out
}

/// Applies a vertex map `perm[i] = image of i` to a mask.
pub fn map_face(x: Face, perm: &[usize]) -> Face {
    indices(x).fold(0, |acc, i| acc | bit(perm[i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_subsets_counts_match_binomials() {
        for m in 0..10 {
            for k in 0..=m {
                assert_eq!(k_subsets(full(m), k).len() as u64, binom(m, k));
            }
        }
        let x = from_indices(&[1, 4, 7]);
        assert_eq!(k_subsets(x, 2), vec![0b10010, 0b10000010, 0b10010000]);
    }

    #[test]
    fn submasks_enumerates_power_set() {
        let x = 0b1011;
        let mut s: Vec<_> = submasks(x).collect();
        s.sort_unstable();
        assert_eq!(s, vec![0, 1, 2, 3, 8, 9, 10, 11]);
    }

    #[test]
    fn compress_packs_selected_bits() {
        assert_eq!(compress(0b10100, 0b11100), 0b101);
        assert_eq!(full(64), u64::MAX);
    }
}
