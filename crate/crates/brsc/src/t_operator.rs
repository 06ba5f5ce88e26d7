//! The `T(H)` Moore family and everything built on it: recognition of
//! truncated representable complexes, codimension, and the going-up
//! classification of paving complexes.

use crate::bits::{self, Face};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::lattice::{self, ClosureSystem, MooreFamily};
use crate::paving::{self, PavingSpace, TopSet};

/// The closure operator onto `T(H)`.
///
/// `T` is closed iff every face of `H_d` inside `T` extends by every outside
/// point, where `d = dim H`.
pub struct TClosure<'a> {
    c: &'a Complex,
    d: usize,
    low: Vec<Face>,
}

impl<'a> TClosure<'a> {
    pub fn new(c: &'a Complex) -> Self {
        let d = c.dim();
        let low = if d == 0 {
            vec![0]
        } else {
            c.truncate(d).expect("d >= 1").facets().to_vec()
        };
        TClosure { c, d, low }
    }

    /// Closure onto `T(H_k)`: faces of `H_{k-1}` inside `T` must extend by
    /// every outside point to faces of `H_k`.
    pub fn at_level(c: &'a Complex, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("T(H_k) needs k >= 1"));
        }
        let low = if k == 1 {
            vec![0]
        } else {
            c.truncate(k - 1)?.facets().to_vec()
        };
        Ok(TClosure { c, d: k - 1, low })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn contains(&self, t: Face) -> bool {
        self.close(t) == t
    }
}

impl ClosureSystem for TClosure<'_> {
    fn n(&self) -> usize {
        self.c.n()
    }

    fn close(&self, x: Face) -> Face {
        let all = self.c.vertices();
        let mut f = x & all;
        'grow: loop {
            for &b in &self.low {
                let y = b & f;
                for p in bits::indices(all & !f & !b) {
                    if !self.c.is_face(y | bits::bit(p)) {
                        f |= bits::bit(p);
                        continue 'grow;
                    }
                }
            }
            return f;
        }
    }
}

pub fn t_family(c: &Complex) -> MooreFamily {
    lattice::closed_sets(&TClosure::new(c))
}

/// `T(H_k)` for the `k`-truncation, `k >= 1`.
pub fn t_family_at(c: &Complex, k: usize) -> Result<MooreFamily> {
    Ok(lattice::closed_sets(&TClosure::at_level(c, k)?))
}

/// `Cl_T(X)`, the least member of `T(H)` containing `X`.
pub fn cl_t(c: &Complex, x: Face) -> Face {
    TClosure::new(c).close(x)
}

/// `(J(T(H)))_{d+1}`.
pub fn truncated_transversal_complex(c: &Complex) -> Complex {
    let tc = TClosure::new(c);
    lattice::transversal_complex_of(&tc, c.dim() + 1).expect("∅ is always in T(H)")
}

/// `H = (J(T(H)))_{d+1}`.
pub fn is_tbrsc(c: &Complex) -> bool {
    truncated_transversal_complex(c) == *c
}

/// `dim J(T(H))`.
pub fn dim_jt(c: &Complex) -> usize {
    t_family(c).height().saturating_sub(1)
}

/// `dim J(T(H)) - dim H`. Negative when `H` is not even contained in `J(T(H))`.
pub fn codimension(c: &Complex) -> i64 {
    dim_jt(c) as i64 - c.dim() as i64
}

/// What `T(H)` says about the dimension of `J(T(H))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoesUpReport {
    pub t_family_size: usize,
    /// Strict steps in a longest chain of `T(H)`.
    pub max_chain_length: usize,
    pub dim_jt: usize,
    pub codimension: i64,
    pub goes_up: bool,
    /// For paving complexes: `X ∈ P_{d+1}(V)`, `Y ∈ P_d(X)` with
    /// `Cl_T(Y) ⊂ Cl_T(X) ⊂ V`.
    pub witness: Option<(Face, Face)>,
}

pub fn goes_up(c: &Complex) -> GoesUpReport {
    let t = t_family(c);
    let height = t.height();
    let d = c.dim();
    let dim = height.saturating_sub(1);
    let witness = if c.is_paving().is_some() {
        cltt_witness(c)
    } else {
        None
    };
    if c.is_paving().is_some() {
        debug_assert_eq!(witness.is_some(), dim > d);
    }
    GoesUpReport {
        t_family_size: t.len(),
        max_chain_length: height,
        dim_jt: dim,
        codimension: dim as i64 - d as i64,
        goes_up: dim > d,
        witness,
    }
}

fn cltt_witness(c: &Complex) -> Option<(Face, Face)> {
    let tc = TClosure::new(c);
    let d = c.dim();
    let all = c.vertices();
    for x in bits::p_k(c.n(), d + 1) {
        let cx = tc.close(x);
        if cx == all {
            continue;
        }
        for y in bits::k_subsets(x, d) {
            let cy = tc.close(y);
            if cy != cx {
                return Some((x, y));
            }
        }
    }
    None
}

/// Position of a paving complex relative to the going-up boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Minimality {
    /// Goes up, and dropping any one top face stops it.
    MinimalGoingUp,
    /// Does not go up, and adding any one top face makes it.
    MinimalNotGoingUp,
    Neither,
}

impl Minimality {
    pub fn as_str(self) -> &'static str {
        match self {
            Minimality::MinimalGoingUp => "mGU",
            Minimality::MinimalNotGoingUp => "MNGU",
            Minimality::Neither => "neither",
        }
    }
}

fn paving_d(c: &Complex) -> Result<usize> {
    c.is_paving()
        .ok_or_else(|| Error::domain("minimality is defined for paving complexes only"))
}

/// Classifies by single-face moves, which suffice because going up is monotone.
pub fn classify_minimality(c: &Complex) -> Result<Minimality> {
    let d = paving_d(c)?;
    if let Ok(sp) = PavingSpace::new(c.n(), d) {
        let def = sp.defect_of(c)?;
        return Ok(classify_in_space(&sp, def, |x| sp.goes_up(x)));
    }
    let defect: Vec<Face> = c.defect()?.members().to_vec();
    let tops: Vec<Face> = bits::p_k(c.n(), d + 1);
    let gu = |missing: &[Face]| -> Result<bool> {
        Ok(goes_up(&Complex::paving_from_defect(c.n(), d, missing)?).goes_up)
    };
    if goes_up(c).goes_up {
        for &t in tops.iter().filter(|t| !defect.contains(t)) {
            let mut m = defect.clone();
            m.push(t);
            if m.len() < tops.len() && gu(&m)? {
                return Ok(Minimality::Neither);
            }
        }
        Ok(Minimality::MinimalGoingUp)
    } else {
        for &t in &defect {
            let m: Vec<Face> = defect.iter().copied().filter(|&x| x != t).collect();
            if !gu(&m)? {
                return Ok(Minimality::Neither);
            }
        }
        Ok(Minimality::MinimalNotGoingUp)
    }
}

/// Minimality of the complex with defect `def`, given any going-up oracle.
pub fn classify_in_space(
    sp: &PavingSpace,
    def: TopSet,
    gu: impl Fn(TopSet) -> bool,
) -> Minimality {
    let all = sp.all_tops();
    let bits_of = |m: TopSet| (0..sp.tops().len()).filter(move |&i| m >> i & 1 == 1);
    if gu(def) {
        let ok = bits_of(all & !def)
            .map(|i| def | 1 << i)
            .filter(|&m| m != all)
            .all(|m| !gu(m));
        if ok {
            Minimality::MinimalGoingUp
        } else {
            Minimality::Neither
        }
    } else if bits_of(def).all(|i| gu(def & !(1 << i))) {
        Minimality::MinimalNotGoingUp
    } else {
        Minimality::Neither
    }
}

fn scan(n: usize, d: usize, want: Minimality) -> Result<Vec<Complex>> {
    use rayon::prelude::*;
    let sp = PavingSpace::new(n, d)?;
    let table = sp.gu_table()?;
    let all = sp.all_tops();
    let gu = |m: TopSet| paving::table_bit(&table, m);
    let hits: Vec<TopSet> = sp
        .defects()?
        .filter(|&def| def != all && classify_in_space(&sp, def, gu) == want)
        .collect();
    let group = sp.symmetric_group();
    let mut classes: Vec<TopSet> = hits
        .par_iter()
        .map(|&def| PavingSpace::canonical(def, &group))
        .collect();
    classes.sort_unstable();
    classes.dedup();
    classes.into_iter().map(|def| sp.complex(def)).collect()
}

/// Isomorphism classes of `MNGU(d)` on `n` vertices by exhaustive scan.
pub fn enumerate_mngu(n: usize, d: usize) -> Result<Vec<Complex>> {
    scan(n, d, Minimality::MinimalNotGoingUp)
}

/// Isomorphism classes of `mGU(d)` on `n` vertices by exhaustive scan.
pub fn enumerate_mgu_exhaustive(n: usize, d: usize) -> Result<Vec<Complex>> {
    scan(n, d, Minimality::MinimalGoingUp)
}

/// The index set of the `J(i,j,n)` representatives of `mGU(2)`.
pub fn q_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = vec![(2, 3)];
    if n >= 6 {
        for i in 2..=n - 4 {
            for j in i + 2..=n - 2 {
                out.push((i, j));
            }
        }
    }
    out.sort_unstable();
    out
}

/// The representatives `J(i,j,n)`, `(i,j)` in [`q_pairs`], with checks.
#[derive(Clone, Debug)]
pub struct MguClassification {
    pub n: usize,
    pub members: Vec<((usize, usize), Complex)>,
    pub all_minimal_going_up: bool,
    pub pairwise_non_isomorphic: bool,
    /// Class count from the exhaustive scan, when it is feasible.
    pub exhaustive_count: Option<usize>,
}

/// `mGU(2)` on `n >= 4` vertices through the `J(i,j,n)` family.
pub fn enumerate_mgu(n: usize) -> Result<MguClassification> {
    if n < 4 {
        return Err(Error::domain("mGU(2) needs at least 4 vertices"));
    }
    if n > 10 {
        return Err(Error::capacity("mGU(2) verification is limited to 10 vertices"));
    }
    let mut members = Vec::new();
    for (i, j) in q_pairs(n) {
        members.push(((i, j), crate::catalog::j_ij(i, j, n)?));
    }
    let all_minimal_going_up = members
        .iter()
        .map(|(_, c)| classify_minimality(c))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|m| m == Minimality::MinimalGoingUp);
    let mut pairwise_non_isomorphic = true;
    for a in 0..members.len() {
        for b in a + 1..members.len() {
            if crate::iso::are_isomorphic(&members[a].1, &members[b].1).is_some() {
                pairwise_non_isomorphic = false;
            }
        }
    }
    let exhaustive_count = if n <= 6 {
        Some(enumerate_mgu_exhaustive(n, 2)?.len())
    } else {
        None
    };
    Ok(MguClassification {
        n,
        members,
        all_minimal_going_up,
        pairwise_non_isomorphic,
        exhaustive_count,
    })
}

/// True iff every one-vertex restriction is again in `mGU(2)`.
pub fn every_restriction_mgu(c: &Complex) -> Result<bool> {
    for p in 0..c.n() {
        let r = c.restriction(c.vertices() & !bits::bit(p))?;
        if r.is_paving() != Some(2) || classify_minimality(&r)? != Minimality::MinimalGoingUp {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff some one-vertex restriction is again in `mGU(2)`.
pub fn some_restriction_mgu(c: &Complex) -> Result<Option<usize>> {
    for p in 0..c.n() {
        let r = c.restriction(c.vertices() & !bits::bit(p))?;
        if r.is_paving() == Some(2) && classify_minimality(&r)? == Minimality::MinimalGoingUp {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Graph-side and complex-side answers for a paving complex of dimension 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dim1Report {
    /// Connected components of the graph of missing edges.
    pub components: usize,
    pub defect_is_forest: bool,
    pub components_are_cliques: bool,
    pub goes_up: bool,
    pub minimality: Minimality,
    /// The graph predicates agree with the direct computation.
    pub consistent: bool,
}

/// Component count, forest flag and clique flag of a graph on `0..n`.
pub fn graph_shape(n: usize, edges: &[Face]) -> (usize, bool, bool) {
    let mut uf = petgraph::unionfind::UnionFind::<usize>::new(n);
    let mut forest = true;
    for &e in edges {
        let mut it = bits::indices(e);
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        if !uf.union(a, b) {
            forest = false;
        }
    }
    let labels = uf.into_labeling();
    let mut size = vec![0usize; n];
    for &l in &labels {
        size[l] += 1;
    }
    let components = size.iter().filter(|&&s| s > 0).count();
    let mut edges_in = vec![0usize; n];
    for &e in edges {
        edges_in[labels[e.trailing_zeros() as usize]] += 1;
    }
    let cliques = (0..n).all(|l| size[l] == 0 || edges_in[l] == size[l] * (size[l] - 1) / 2);
    (components, forest, cliques)
}

/// Predicted minimality from the defect graph alone.
pub fn dim1_prediction(components: usize, forest: bool, cliques: bool) -> (bool, Minimality) {
    let gu = components > 2;
    let m = if components == 3 && cliques {
        Minimality::MinimalGoingUp
    } else if components == 2 && forest {
        Minimality::MinimalNotGoingUp
    } else {
        Minimality::Neither
    };
    (gu, m)
}

pub fn dim1_gu_facts(c: &Complex) -> Result<Dim1Report> {
    if c.is_paving() != Some(1) {
        return Err(Error::domain("needs a paving complex of dimension 1"));
    }
    let def = c.defect()?;
    let (components, forest, cliques) = graph_shape(c.n(), def.members());
    let gu = goes_up(c).goes_up;
    let minimality = classify_minimality(c)?;
    let predicted = dim1_prediction(components, forest, cliques);
    Ok(Dim1Report {
        components,
        defect_is_forest: forest,
        components_are_cliques: cliques,
        goes_up: gu,
        minimality,
        consistent: predicted == (gu, minimality),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::from_one_based as s;

    fn far() -> Complex {
        Complex::new(4, bits::p_k(4, 2).into_iter().chain([s(&[1, 2, 3])])).unwrap()
    }

    #[test]
    fn t_family_of_one_triangle_on_four_points() {
        let t = t_family(&far());
        assert_eq!(t.members(), &[0, 1, 2, 4, 8, 15]);
        assert!(!is_tbrsc(&far()));
        assert_eq!(codimension(&far()), -1);
    }

    #[test]
    fn uniform_matroid_is_mgu_on_four_points() {
        let u = Complex::uniform(3, 4).unwrap();
        assert!(is_tbrsc(&u));
        assert_eq!(classify_minimality(&u).unwrap(), Minimality::MinimalGoingUp);
        let one_missing = Complex::paving_from_defect(4, 2, &[s(&[1, 2, 3])]).unwrap();
        assert_eq!(
            classify_minimality(&one_missing).unwrap(),
            Minimality::MinimalNotGoingUp
        );
    }

    #[test]
    fn q_pair_counts_follow_the_quadratic() {
        for n in 4..=12 {
            assert_eq!(2 * q_pairs(n).len(), n * n + 22 - 9 * n);
        }
    }

    #[test]
    fn dim1_examples() {
        // Two disjoint missing edges on four points.
        let c = Complex::paving_from_defect(4, 1, &[s(&[1, 2]), s(&[3, 4])]).unwrap();
        let r = dim1_gu_facts(&c).unwrap();
        assert_eq!(r.minimality, Minimality::MinimalNotGoingUp);
        assert!(r.consistent);
        // Triangle, edge and point on six points.
        let c = Complex::paving_from_defect(
            6,
            1,
            &[s(&[1, 2]), s(&[1, 3]), s(&[2, 3]), s(&[4, 5])],
        )
        .unwrap();
        let r = dim1_gu_facts(&c).unwrap();
        assert_eq!(r.minimality, Minimality::MinimalGoingUp);
        assert!(r.consistent);
        // A connected defect graph.
        let c = Complex::paving_from_defect(3, 1, &[s(&[1, 2]), s(&[2, 3])]).unwrap();
        let r = dim1_gu_facts(&c).unwrap();
        assert!(!r.goes_up);
        assert_eq!(r.minimality, Minimality::Neither);
        // One missing edge leaves three clique components on four points.
        let c = Complex::paving_from_defect(4, 1, &[s(&[1, 2])]).unwrap();
        assert_eq!(dim1_gu_facts(&c).unwrap().minimality, Minimality::MinimalGoingUp);
    }
}
