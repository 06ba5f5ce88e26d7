//! Bit-parallel kernel for paving complexes on few vertices.
//!
//! A paving complex of dimension `d` on `n` vertices is determined by which
//! `(d+1)`-sets are missing. With at most 128 such sets the missing ones fit
//! in a `u128`, and the `T(H)` test, the flat test and both representability
//! tests reduce to a handful of mask operations per subset of `V`.

use itertools::Itertools;
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::bits::{self, Face};
use crate::complex::Complex;
use crate::error::{Error, Result};

/// A set of top faces, one bit per entry of [`PavingSpace::tops`].
pub type TopSet = u128;

const MAX_TABLE_BITS: usize = 26;

/// Precomputed incidence data for `Pav(d)` on `n` vertices.
pub struct PavingSpace {
    n: usize,
    d: usize,
    tops: Vec<Face>,
    index: FxHashMap<Face, usize>,
    cross: Vec<TopSet>,
    inside: Vec<TopSet>,
}

impl PavingSpace {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if d == 0 || d + 1 > n {
            return Err(Error::domain(format!("no paving complexes of dimension {d} on {n} vertices")));
        }
        let m = bits::binom(n, d + 1);
        if m > 128 || n > 16 {
            return Err(Error::capacity(format!(
                "{m} top faces on {n} vertices exceed the paving kernel"
            )));
        }
        let tops = bits::p_k(n, d + 1);
        let index = tops.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let size = 1usize << n;
        let mut cross = vec![0; size];
        let mut inside = vec![0; size];
        for t in 0..size {
            for (i, &x) in tops.iter().enumerate() {
                let k = bits::card(x & t as Face);
                if k == d {
                    cross[t] |= 1 << i;
                }
                if k == d + 1 {
                    inside[t] |= 1 << i;
                }
            }
        }
        Ok(PavingSpace { n, d, tops, index, cross, inside })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn tops(&self) -> &[Face] {
        &self.tops
    }

    pub fn all_tops(&self) -> TopSet {
        if self.tops.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.tops.len()) - 1
        }
    }

    pub fn top_index(&self, x: Face) -> Option<usize> {
        self.index.get(&x).copied()
    }

    pub fn mask_of(&self, faces: &[Face]) -> Result<TopSet> {
        let mut m = 0;
        for &x in faces {
            let i = self
                .top_index(x)
                .ok_or_else(|| Error::domain("face is not a top face of this space"))?;
            m |= 1 << i;
        }
        Ok(m)
    }

    pub fn faces_of(&self, m: TopSet) -> Vec<Face> {
        (0..self.tops.len())
            .filter(|&i| m >> i & 1 == 1)
            .map(|i| self.tops[i])
            .collect()
    }

    /// Defect mask of a paving complex that lives in this space.
    pub fn defect_of(&self, c: &Complex) -> Result<TopSet> {
        if c.n() != self.n || c.is_paving() != Some(self.d) {
            return Err(Error::domain("complex does not belong to this paving space"));
        }
        self.mask_of(c.defect()?.members())
    }

    pub fn complex(&self, def: TopSet) -> Result<Complex> {
        Complex::paving_from_defect(self.n, self.d, &self.faces_of(def))
    }

    #[inline]
    pub fn in_t(&self, def: TopSet, t: Face) -> bool {
        self.cross[t as usize] & def == 0
    }

    #[inline]
    pub fn is_flat(&self, def: TopSet, f: Face) -> bool {
        self.in_t(def, f)
            && (f == bits::full(self.n) || self.inside[f as usize] & !def & self.all_tops() == 0)
    }

    /// `T(H)`, sorted by bitmask.
    pub fn t_family(&self, def: TopSet) -> Vec<Face> {
        (0..(1u64 << self.n)).filter(|&t| self.in_t(def, t)).collect()
    }

    pub fn flats(&self, def: TopSet) -> Vec<Face> {
        (0..(1u64 << self.n)).filter(|&f| self.is_flat(def, f)).collect()
    }

    /// True iff `T(H)` has a chain `A ⊂ B ⊂ V` with `|A| >= d`.
    pub fn goes_up(&self, def: TopSet) -> bool {
        let all = bits::full(self.n);
        let mut mid: Vec<Face> = Vec::new();
        for t in 0..all {
            if bits::card(t) >= self.d && self.in_t(def, t) {
                mid.push(t);
            }
        }
        mid.iter().any(|&a| mid.iter().any(|&b| a != b && bits::is_subset(a, b)))
    }

    fn covered(&self, def: TopSet, flats_only: bool) -> TopSet {
        let mut cov = 0;
        for t in 0..(1u64 << self.n) {
            let ok = if flats_only { self.is_flat(def, t) } else { self.in_t(def, t) };
            if ok {
                cov |= self.cross[t as usize];
            }
        }
        cov
    }

    /// `H = J(T(H))_{d+1}`.
    pub fn is_tbrsc(&self, def: TopSet) -> bool {
        let present = self.all_tops() & !def;
        present & !self.covered(def, false) == 0
    }

    /// `H = J(Fl H)`.
    pub fn is_br(&self, def: TopSet) -> bool {
        let present = self.all_tops() & !def;
        present & !self.covered(def, true) == 0
    }

    fn table_size(&self) -> Result<usize> {
        let m = self.tops.len();
        if m > MAX_TABLE_BITS {
            return Err(Error::capacity(format!(
                "2^{m} defect sets exceed the exhaustive scan limit of 2^{MAX_TABLE_BITS}"
            )));
        }
        Ok(1usize << m)
    }

    /// Evaluates `pred` on every defect set, returning a packed bit table.
    pub fn table(&self, pred: impl Fn(TopSet) -> bool + Sync) -> Result<Vec<u64>> {
        let size = self.table_size()?;
        Ok((0..size.div_ceil(64))
            .into_par_iter()
            .map(|w| {
                let mut word = 0u64;
                for b in 0..64 {
                    let def = (w * 64 + b) as TopSet;
                    if (def as usize) < size && pred(def) {
                        word |= 1 << b;
                    }
                }
                word
            })
            .collect())
    }

    pub fn gu_table(&self) -> Result<Vec<u64>> {
        self.table(|def| self.goes_up(def))
    }

    /// Every defect set, as a parallel iterator.
    pub fn defects(&self) -> Result<impl ParallelIterator<Item = TopSet>> {
        let size = self.table_size()?;
        Ok((0..size).into_par_iter().map(|x| x as TopSet))
    }

    /// Permutation of top indices induced by a vertex permutation.
    pub fn top_permutation(&self, perm: &[usize]) -> Vec<usize> {
        self.tops
            .iter()
            .map(|&x| self.index[&bits::map_face(x, perm)])
            .collect()
    }

    /// Top permutations for the whole symmetric group on `V`.
    pub fn symmetric_group(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .permutations(self.n)
            .map(|p| self.top_permutation(&p))
            .collect()
    }

    pub fn apply(def: TopSet, top_perm: &[usize]) -> TopSet {
        let mut out = 0;
        let mut rest = def;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << top_perm[i];
        }
        out
    }

    /// Least image of `def` under the given top permutations.
    pub fn canonical(def: TopSet, group: &[Vec<usize>]) -> TopSet {
        group.iter().map(|p| Self::apply(def, p)).min().unwrap_or(def)
    }
}

/// Reads bit `i` of a packed table.
#[inline]
pub fn table_bit(table: &[u64], i: TopSet) -> bool {
    let i = i as usize;
    table[i >> 6] >> (i & 63) & 1 == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice;
    use crate::t_operator;

    #[test]
    fn kernel_agrees_with_generic_code_on_five_points() {
        let sp = PavingSpace::new(5, 2).unwrap();
        for def in (0..(1u128 << 10)).step_by(7) {
            let c = sp.complex(def).unwrap();
            if c.is_paving() != Some(2) {
                continue;
            }
            assert_eq!(sp.flats(def), lattice::flats(&c).members());
            assert_eq!(sp.t_family(def), t_operator::t_family(&c).members());
            assert_eq!(sp.is_br(def), lattice::is_boolean_representable(&c).representable);
            assert_eq!(sp.is_tbrsc(def), t_operator::is_tbrsc(&c));
            assert_eq!(sp.goes_up(def), t_operator::goes_up(&c).goes_up);
        }
    }

    #[test]
    fn canonical_forms_identify_relabelings() {
        let sp = PavingSpace::new(4, 2).unwrap();
        let g = sp.symmetric_group();
        assert_eq!(g.len(), 24);
        let singles: Vec<TopSet> = (0..4).map(|i| PavingSpace::canonical(1 << i, &g)).collect();
        assert!(singles.iter().all(|&x| x == singles[0]));
    }

    #[test]
    fn oversized_spaces_are_capacity_errors() {
        assert!(matches!(PavingSpace::new(11, 2), Err(Error::Capacity(_))));
        assert!(matches!(PavingSpace::new(7, 2).unwrap().gu_table(), Err(Error::Capacity(_))));
    }
}
