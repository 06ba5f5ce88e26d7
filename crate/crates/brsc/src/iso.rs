//! Isomorphism, canonical forms and the `≤` embedding order on complexes.
//!
//! Canonical forms come from individualization and colour refinement over
//! facet incidences. Transpositions that are automorphisms prune sibling
//! branches, which keeps highly symmetric complexes cheap.

use std::hash::{Hash, Hasher};

use rayon::prelude::*;
use rustc_hash::{FxHashSet, FxHasher};

use crate::bits::{self, Face};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::paving::{PavingSpace, TopSet};

/// Sorted facet list of a relabelled copy, and the relabelling used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub n: usize,
    pub facets: Vec<Face>,
    /// `perm[v]` is the canonical position of vertex `v`.
    pub perm: Vec<usize>,
}

impl CanonicalForm {
    /// Same isomorphism class, ignoring the certificates.
    pub fn same_class(&self, other: &CanonicalForm) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

fn mix(data: impl Hash) -> u64 {
    let mut h = FxHasher::default();
    data.hash(&mut h);
    h.finish()
}

/// Refines an ordered colouring until it is stable. Colours are ranks, and
/// a vertex's new colour is the rank of its old colour together with the
/// multiset of facet shapes around it.
fn refine(c: &Complex, colour: &mut [usize]) {
    let n = c.n();
    let mut cells = distinct(colour);
    loop {
        let mut sig: Vec<(usize, u64)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut around: Vec<u64> = c
                .facets()
                .iter()
                .filter(|&&b| b >> v & 1 == 1)
                .map(|&b| {
                    let mut cs: Vec<usize> =
                        bits::indices(b).filter(|&u| u != v).map(|u| colour[u]).collect();
                    cs.sort_unstable();
                    mix(cs)
                })
                .collect();
            around.sort_unstable();
            sig.push((colour[v], mix(around)));
        }
        let mut keys = sig.clone();
        keys.sort_unstable();
        keys.dedup();
        for v in 0..n {
            colour[v] = keys.binary_search(&sig[v]).expect("present");
        }
        let now = keys.len();
        if now == cells {
            return;
        }
        cells = now;
    }
}

fn distinct(colour: &[usize]) -> usize {
    colour.iter().collect::<FxHashSet<_>>().len()
}

fn initial_colour(c: &Complex) -> Vec<usize> {
    let n = c.n();
    let top = c.dim() + 1;
    let faces = c.faces();
    let sig: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut deg = vec![0usize; top + 1];
            for &x in &faces {
                if x >> v & 1 == 1 {
                    deg[bits::card(x)] += 1;
                }
            }
            deg
        })
        .collect();
    let mut keys = sig.clone();
    keys.sort_unstable();
    keys.dedup();
    sig.iter().map(|s| keys.binary_search(s).expect("present")).collect()
}

fn mapped(c: &Complex, perm: &[usize]) -> Vec<Face> {
    let mut f: Vec<Face> = c.facets().iter().map(|&b| bits::map_face(b, perm)).collect();
    f.sort_unstable();
    f
}

fn swap_is_automorphism(c: &Complex, a: usize, b: usize) -> bool {
    let mut perm: Vec<usize> = (0..c.n()).collect();
    perm.swap(a, b);
    mapped(c, &perm) == c.facets()
}

struct Search<'a> {
    c: &'a Complex,
    best: Option<(Vec<Face>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, colour: Vec<usize>) {
        let n = self.c.n();
        let mut size = vec![0usize; n];
        for &k in &colour {
            size[k] += 1;
        }
        let Some(target) = (0..n).find(|&k| size[k] > 1) else {
            let facets = mapped(self.c, &colour);
            if self.best.as_ref().is_none_or(|(b, _)| facets < *b) {
                self.best = Some((facets, colour));
            }
            return;
        };
        let members: Vec<usize> = (0..n).filter(|&v| colour[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&u| swap_is_automorphism(self.c, u, v)) {
                continue;
            }
            tried.push(v);
            let mut next: Vec<usize> = colour
                .iter()
                .map(|&k| if k > target { k + 1 } else { k })
                .collect();
            for &u in &members {
                if u != v {
                    next[u] = target + 1;
                }
            }
            refine(self.c, &mut next);
            self.descend(next);
        }
    }
}

/// Canonical form: the least sorted facet list over the leaves of the
/// individualization-refinement tree.
pub fn canonical_form(c: &Complex) -> CanonicalForm {
    let mut colour = initial_colour(c);
    refine(c, &mut colour);
    let mut s = Search { c, best: None };
    s.descend(colour);
    let (facets, perm) = s.best.expect("the search reaches a leaf");
    CanonicalForm { n: c.n(), facets, perm }
}

/// A vertex bijection `φ` with `Hφ = H'`, if one exists.
pub fn are_isomorphic(a: &Complex, b: &Complex) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.facets().len() != b.facets().len() {
        return None;
    }
    if a.counting_function().alpha != b.counting_function().alpha {
        return None;
    }
    let ca = canonical_form(a);
    let cb = canonical_form(b);
    if !ca.same_class(&cb) {
        return None;
    }
    let mut inv = vec![0; b.n()];
    for (v, &p) in cb.perm.iter().enumerate() {
        inv[p] = v;
    }
    let phi: Vec<usize> = ca.perm.iter().map(|&p| inv[p]).collect();
    debug_assert_eq!(a.permuted(&phi), *b);
    Some(phi)
}

/// A vertex bijection `φ` with `Hφ ⊆ H'`, if one exists.
pub fn embeds(a: &Complex, b: &Complex) -> Result<Option<Vec<usize>>> {
    if a.n() != b.n() {
        return Err(Error::domain("embedding compares complexes on equally many vertices"));
    }
    let n = a.n();
    let mut order: Vec<usize> = (0..n).collect();
    let deg = |c: &Complex, v: usize| c.facets().iter().filter(|&&f| f >> v & 1 == 1).count();
    order.sort_by_key(|&v| std::cmp::Reverse(deg(a, v)));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // Facets of `a` grouped by the step at which their last vertex is placed.
    let mut due: Vec<Vec<Face>> = vec![Vec::new(); n];
    for &f in a.facets() {
        let last = bits::indices(f).map(|v| pos[v]).max().unwrap_or(0);
        due[last].push(f);
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = 0 as Face;
    fn go(
        step: usize,
        order: &[usize],
        due: &[Vec<Face>],
        b: &Complex,
        phi: &mut Vec<usize>,
        used: &mut Face,
    ) -> bool {
        if step == order.len() {
            return true;
        }
        let v = order[step];
        for w in 0..b.n() {
            if *used >> w & 1 == 1 {
                continue;
            }
            phi[v] = w;
            let ok = due[step].iter().all(|&f| b.is_face(bits::map_face(f, phi)));
            if ok {
                *used |= bits::bit(w);
                if go(step + 1, order, due, b, phi, used) {
                    return true;
                }
                *used &= !bits::bit(w);
            }
        }
        phi[v] = usize::MAX;
        false
    }
    if go(0, &order, &due, b, &mut phi, &mut used) {
        Ok(Some(phi))
    } else {
        Ok(None)
    }
}

/// One isomorphism class of paving complexes.
#[derive(Clone, Debug)]
pub struct IsoClass {
    /// Least defect mask in the class.
    pub defect: TopSet,
    pub complex: Complex,
    /// Number of defect sets in the class satisfying the predicate.
    pub members: usize,
}

/// Classes of `Pav(d)` complexes on `n` vertices whose defect satisfies
/// `pred`. The full top set is skipped since it leaves dimension `d`.
pub fn enumerate_up_to_iso(
    n: usize,
    d: usize,
    pred: impl Fn(&PavingSpace, TopSet) -> bool + Sync,
) -> Result<Vec<IsoClass>> {
    let sp = PavingSpace::new(n, d)?;
    if n > 8 {
        return Err(Error::capacity("isomorphism enumeration is limited to 8 vertices"));
    }
    let all = sp.all_tops();
    let hits: Vec<TopSet> = sp.defects()?.filter(|&def| def != all && pred(&sp, def)).collect();
    let group = sp.symmetric_group();
    let mut canon: Vec<TopSet> = hits.par_iter().map(|&def| PavingSpace::canonical(def, &group)).collect();
    canon.sort_unstable();
    let mut out: Vec<IsoClass> = Vec::new();
    for def in canon {
        match out.last_mut() {
            Some(last) if last.defect == def => last.members += 1,
            _ => out.push(IsoClass { defect: def, complex: sp.complex(def)?, members: 1 }),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::from_one_based as s;
    use crate::catalog;

    #[test]
    fn isomorphic_six_point_cases() {
        let a = catalog::six(1).unwrap();
        let b = catalog::six_prime().unwrap();
        let phi = are_isomorphic(&a, &b).unwrap();
        assert_eq!(a.permuted(&phi), b);
        let id = are_isomorphic(&a, &a).unwrap();
        assert_eq!(a.permuted(&id), a);
        for i in 1..=5 {
            for j in i + 1..=5 {
                let x = catalog::six(i).unwrap();
                let y = catalog::six(j).unwrap();
                assert!(are_isomorphic(&x, &y).is_none(), "{i} vs {j}");
            }
        }
    }

    #[test]
    fn mngu_classes_six_and_seven_differ() {
        let m = |i| Complex::paving_from_defect(6, 2, &catalog::mngu6_defect(i).unwrap()).unwrap();
        assert!(are_isomorphic(&m(6), &m(7)).is_none());
    }

    #[test]
    fn symmetric_complexes_canonicalize_quickly() {
        let u = Complex::uniform(4, 10).unwrap();
        let cf = canonical_form(&u);
        assert_eq!(cf.facets, u.facets());
        let d = catalog::desargues().unwrap();
        let shuffled = d.permuted(&[3, 1, 4, 0, 5, 9, 2, 6, 8, 7]);
        assert!(are_isomorphic(&d, &shuffled).is_some());
    }

    #[test]
    fn embeddings_between_j_families() {
        let n = 6;
        let i = 3;
        let small = catalog::j_ij(2, i + 1, n).unwrap();
        let big = catalog::j_ij(i, n - 1, n).unwrap();
        assert!(embeds(&small, &big).unwrap().is_some());
        let cons = catalog::j_ij(i, i + 1, n).unwrap();
        assert!(embeds(&small, &cons).unwrap().is_some());
        assert!(embeds(&cons, &small).unwrap().is_none());
        assert!(embeds(&small, &small).unwrap().is_some());
        assert!(embeds(&small, &Complex::uniform(2, 5).unwrap()).is_err());
    }

    #[test]
    fn case_four_does_not_embed_in_case_three() {
        let a = catalog::six(4).unwrap();
        let b = catalog::six(3).unwrap();
        assert!(embeds(&a, &b).unwrap().is_none());
        assert!(embeds(&catalog::six(1).unwrap(), &b).unwrap().is_some());
    }

    #[test]
    fn four_point_non_representable_paving_classes() {
        let classes = enumerate_up_to_iso(4, 2, |sp, def| !sp.is_br(def)).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].complex.faces_of_size(3).len(), 1);
        let c = Complex::paving_from_defect(4, 2, &[s(&[1, 2, 4]), s(&[1, 3, 4]), s(&[2, 3, 4])])
            .unwrap();
        assert!(are_isomorphic(&c, &classes[0].complex).is_some());
    }
}
