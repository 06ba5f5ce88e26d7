//! Seeded random generators for complexes, Moore families and matroids.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{self, Face};
use crate::complex::{Complex, SetFamily};
use crate::error::Result;
use crate::lattice::{self, MooreFamily};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random subset of `mask`, each element kept with probability `p`.
pub fn subset(rng: &mut impl Rng, mask: Face, p: f64) -> Face {
    bits::indices(mask)
        .filter(|_| rng.random_bool(p))
        .fold(0, |a, i| a | bits::bit(i))
}

/// Random permutation of `0..n`.
pub fn permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Down-closure of up to `max_gens` random subsets, plus singletons.
pub fn complex(rng: &mut impl Rng, n: usize, max_gens: usize) -> Result<Complex> {
    let k = rng.random_range(0..=max_gens);
    let p = rng.random_range(0.2..0.8);
    let gens: Vec<Face> = (0..k).map(|_| subset(rng, bits::full(n), p)).collect();
    Complex::new(n, gens)
}

/// Intersection closure of a few random subsets, with `∅` and `V`.
pub fn moore_family(rng: &mut impl Rng, n: usize) -> MooreFamily {
    let k = rng.random_range(0..=2 * n);
    let p = rng.random_range(0.3..0.8);
    let gens: Vec<Face> = (0..k).map(|_| subset(rng, bits::full(n), p)).collect();
    lattice::moore_close(&SetFamily::new(n, gens))
}

/// `J(R)` for a random Moore family `R`; always boolean representable.
pub fn brsc(rng: &mut impl Rng, n: usize) -> Result<Complex> {
    lattice::transversal_complex(&moore_family(rng, n))
}

/// Paving complex of dimension `d` whose top faces are missing with
/// probability `p`.
pub fn paving(rng: &mut impl Rng, n: usize, d: usize, p: f64) -> Result<Complex> {
    let tops = bits::p_k(n, d + 1);
    loop {
        let def: Vec<Face> = tops.iter().copied().filter(|_| rng.random_bool(p)).collect();
        if def.len() < tops.len() {
            return Complex::paving_from_defect(n, d, &def);
        }
    }
}

/// Representable paving complex of dimension 2: `J(R)` for `R` made of
/// `∅`, the points, `V` and random lines meeting pairwise in at most a point.
pub fn bpav2(rng: &mut impl Rng, n: usize) -> Result<Complex> {
    assert!(n >= 3, "a line needs a point outside it");
    let all = bits::full(n);
    loop {
        let mut lines: Vec<Face> = Vec::new();
        for _ in 0..rng.random_range(1..=n) {
            let size = rng.random_range(2..n);
            let mut pts = permutation(rng, n);
            pts.truncate(size);
            let l = bits::from_indices(&pts);
            if lines.iter().all(|&m| bits::card(l & m) <= 1) {
                lines.push(l);
            }
        }
        if lines.is_empty() {
            continue;
        }
        let members = lines
            .into_iter()
            .chain((0..n).map(bits::bit))
            .chain([0, all]);
        let c = lattice::transversal_complex(&MooreFamily::new(n, members)?)?;
        debug_assert_eq!(c.is_paving(), Some(2));
        return Ok(c);
    }
}

/// Rank of a list of vectors over the prime field `F_q`.
fn rank_mod(rows: &[Vec<u32>], q: u32) -> usize {
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = (1..q).find(|&x| x * m[r][c] % q == 1).expect("prime field");
        for v in m[r].iter_mut() {
            *v = *v * inv % q;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &p) in row.iter_mut().zip(&pivot) {
                    *x = (*x + q * q - f * p) % q;
                }
            }
        }
        r += 1;
    }
    r
}

/// Vector matroid of `n` random nonzero vectors in `F_q^r`, `q ∈ {2, 3}`,
/// truncated at a random rank.
pub fn matroid(rng: &mut impl Rng, n: usize) -> Result<Complex> {
    let q = if rng.random_bool(0.5) { 2 } else { 3 };
    let r = rng.random_range(1..=n.min(4));
    let vecs: Vec<Vec<u32>> = (0..n)
        .map(|_| loop {
            let v: Vec<u32> = (0..r).map(|_| rng.random_range(0..q)).collect();
            if v.iter().any(|&x| x != 0) {
                break v;
            }
        })
        .collect();
    let top = rng.random_range(1..=r);
    let indep: Vec<Face> = (0..1u64 << n)
        .map(|x| x as Face)
        .filter(|&x| bits::card(x) <= top)
        .filter(|&x| {
            let rows: Vec<Vec<u32>> = bits::indices(x).map(|i| vecs[i].clone()).collect();
            rank_mod(&rows, q) == rows.len()
        })
        .collect();
    Complex::new(n, indep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::is_matroid;

    #[test]
    fn generators_are_reproducible_and_valid() {
        let a = matroid(&mut rng(7), 6).unwrap();
        let b = matroid(&mut rng(7), 6).unwrap();
        assert_eq!(a, b);
        let mut g = rng(1);
        for _ in 0..50 {
            let n = g.random_range(3..=7);
            assert!(is_matroid(&matroid(&mut g, n).unwrap()).matroid);
            let c = bpav2(&mut g, n).unwrap();
            assert!(lattice::is_boolean_representable(&c).representable);
            assert!(lattice::is_boolean_representable(&brsc(&mut g, n).unwrap()).representable);
            assert_eq!(paving(&mut g, n, 2, 0.3).unwrap().is_paving(), Some(2));
        }
    }

    #[test]
    fn rank_over_small_fields() {
        assert_eq!(rank_mod(&[vec![1, 1], vec![1, 1]], 2), 1);
        assert_eq!(rank_mod(&[vec![1, 0], vec![0, 1], vec![1, 1]], 2), 2);
        assert_eq!(rank_mod(&[vec![1, 2], vec![2, 1]], 3), 1);
        assert_eq!(rank_mod(&[vec![1, 1], vec![1, 2]], 3), 2);
    }
}
