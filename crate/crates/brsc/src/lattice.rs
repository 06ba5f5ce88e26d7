//! Flats, closure operators, Moore families and boolean matrices.
//!
//! Everything here is phrased through the [`ClosureSystem`] trait so the same
//! transversal search serves the lattice of flats, an explicit Moore family,
//! and the `T(H)` closure from [`crate::t_operator`].

use std::collections::VecDeque;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::bits::{self, Face};
use crate::complex::{Complex, SetFamily};
use crate::error::{Error, Result};

/// A closure operator on the subsets of `0..n`.
pub trait ClosureSystem {
    fn n(&self) -> usize;
    fn close(&self, x: Face) -> Face;
}

/// Closure in the lattice of flats of a complex.
impl ClosureSystem for Complex {
    fn n(&self) -> usize {
        Complex::n(self)
    }

    fn close(&self, x: Face) -> Face {
        closure(self, x)
    }
}

/// Smallest flat containing `x`.
pub fn closure(c: &Complex, x: Face) -> Face {
    let all = c.vertices();
    let mut f = x & all;
    'grow: loop {
        for &b in c.facets() {
            let y = b & f;
            for p in bits::indices(all & !f & !b) {
                if !c.is_face(y | bits::bit(p)) {
                    f |= bits::bit(p);
                    continue 'grow;
                }
            }
        }
        return f;
    }
}

pub fn is_flat(c: &Complex, x: Face) -> bool {
    closure(c, x) == x
}

/// Moore family reachable from `close(∅)` by closing one-point extensions.
pub fn closed_sets(cl: &impl ClosureSystem) -> MooreFamily {
    let all = bits::full(cl.n());
    let start = cl.close(0);
    let mut seen = FxHashSet::default();
    seen.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        for p in bits::indices(all & !f) {
            let g = cl.close(f | bits::bit(p));
            if seen.insert(g) {
                queue.push_back(g);
            }
        }
    }
    seen.insert(0);
    MooreFamily::unchecked(cl.n(), seen)
}

/// The lattice of flats `Fl H`.
pub fn flats(c: &Complex) -> MooreFamily {
    closed_sets(c)
}

/// A family containing `∅` and `V` that is closed under intersection.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MooreFamily {
    family: SetFamily,
}

impl MooreFamily {
    /// Validates the Moore axioms.
    pub fn new(n: usize, members: impl IntoIterator<Item = Face>) -> Result<Self> {
        let family = SetFamily::new(n, members);
        let all = bits::full(n);
        if family.iter().any(|x| x & !all != 0) {
            return Err(Error::domain("member outside the vertex set"));
        }
        if !family.contains(0) || !family.contains(all) {
            return Err(Error::domain("a Moore family must contain ∅ and V"));
        }
        let m = family.members();
        for (i, &a) in m.iter().enumerate() {
            for &b in &m[i + 1..] {
                if !family.contains(a & b) {
                    return Err(Error::domain("family is not closed under intersection"));
                }
            }
        }
        Ok(MooreFamily { family })
    }

    pub(crate) fn unchecked(n: usize, members: impl IntoIterator<Item = Face>) -> Self {
        MooreFamily {
            family: SetFamily::new(n, members),
        }
    }

    pub fn n(&self) -> usize {
        self.family.n()
    }

    pub fn members(&self) -> &[Face] {
        self.family.members()
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn contains(&self, x: Face) -> bool {
        self.family.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = Face> + '_ {
        self.family.iter()
    }

    /// Number of strict steps in a longest chain from `∅` to `V`.
    pub fn height(&self) -> usize {
        let mut order: Vec<Face> = self.members().to_vec();
        order.sort_by_key(|&x| bits::card(x));
        let mut len: FxHashMap<Face, usize> = FxHashMap::default();
        let mut best = 0;
        for (i, &x) in order.iter().enumerate() {
            let l = order[..i]
                .iter()
                .filter(|&&y| y != x && bits::is_subset(y, x))
                .map(|y| len[y] + 1)
                .max()
                .unwrap_or(0);
            len.insert(x, l);
            best = best.max(l);
        }
        best
    }

    /// `R ⊞ p = (R \ {V}) ∪ {{p}, V ∪ {p}}` with `p` the new vertex `n`.
    pub fn boxplus(&self) -> Result<MooreFamily> {
        let n = self.n() + 1;
        if n > crate::complex::MAX_VERTICES {
            return Err(Error::capacity("no room for another vertex"));
        }
        let all = bits::full(self.n());
        let p = bits::bit(self.n());
        let members = self
            .iter()
            .filter(|&x| x != all)
            .chain([p, all | p]);
        Ok(MooreFamily::unchecked(n, members.collect::<Vec<_>>()))
    }
}

impl ClosureSystem for MooreFamily {
    fn n(&self) -> usize {
        self.family.n()
    }

    fn close(&self, x: Face) -> Face {
        self.iter()
            .filter(|&m| bits::is_subset(x, m))
            .fold(bits::full(self.n()), |a, m| a & m)
    }
}

/// Smallest Moore family containing `s`, `∅` and `V`.
pub fn moore_close(s: &SetFamily) -> MooreFamily {
    let all = bits::full(s.n());
    let mut have: FxHashSet<Face> = s.iter().collect();
    have.insert(0);
    have.insert(all);
    let mut list: Vec<Face> = have.iter().copied().collect();
    let mut i = 0;
    while i < list.len() {
        let a = list[i];
        let mut j = 0;
        while j < i {
            let x = a & list[j];
            if have.insert(x) {
                list.push(x);
            }
            j += 1;
        }
        i += 1;
    }
    MooreFamily::unchecked(s.n(), have)
}

/// An ordering `x_1..x_k` of `x` with `x_i ∉ close(x_1..x_{i-1})`, if any.
pub fn transversal_order(cl: &impl ClosureSystem, x: Face) -> Option<Vec<usize>> {
    fn go(
        cl: &impl ClosureSystem,
        x: Face,
        prefix: Face,
        order: &mut Vec<usize>,
        dead: &mut FxHashSet<Face>,
    ) -> bool {
        if prefix == x {
            return true;
        }
        if dead.contains(&prefix) {
            return false;
        }
        let c = cl.close(prefix);
        for v in bits::indices(x & !c) {
            order.push(v);
            if go(cl, x, prefix | bits::bit(v), order, dead) {
                return true;
            }
            order.pop();
        }
        dead.insert(prefix);
        false
    }
    let mut order = Vec::with_capacity(bits::card(x));
    let mut dead = FxHashSet::default();
    go(cl, x, 0, &mut order, &mut dead).then_some(order)
}

/// `J(R)`: sets admitting a transversal ordering for the closure `cl`.
pub fn transversal_complex_of(cl: &impl ClosureSystem, max_size: usize) -> Result<Complex> {
    let n = cl.n();
    let all = bits::full(n);
    let mut seen: FxHashSet<Face> = FxHashSet::default();
    seen.insert(0);
    let mut queue = VecDeque::from([0]);
    while let Some(s) = queue.pop_front() {
        if bits::card(s) >= max_size {
            continue;
        }
        let c = cl.close(s);
        for p in bits::indices(all & !c) {
            let t = s | bits::bit(p);
            if seen.insert(t) {
                queue.push_back(t);
            }
        }
    }
    for p in 0..n {
        if !seen.contains(&bits::bit(p)) {
            return Err(Error::domain(format!(
                "vertex {} lies in the closure of ∅",
                p + 1
            )));
        }
    }
    Complex::from_down_closed(n, &seen)
}

/// `J(R)` for a Moore family.
pub fn transversal_complex(r: &MooreFamily) -> Result<Complex> {
    transversal_complex_of(r, usize::MAX)
}

/// Outcome of the boolean representability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrVerdict {
    pub representable: bool,
    /// First facet, in bitmask order, with no transversal ordering.
    pub witness: Option<Face>,
}

/// Decides whether `H = J(Fl H)`.
pub fn is_boolean_representable(c: &Complex) -> BrVerdict {
    for &b in c.facets() {
        if transversal_order(c, b).is_none() {
            return BrVerdict {
                representable: false,
                witness: Some(b),
            };
        }
    }
    BrVerdict {
        representable: true,
        witness: None,
    }
}

/// A boolean matrix stored by the zero set of each row.
///
/// Entry `(r, v)` is 0 exactly when `v` lies in `rows[r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanMatrix {
    n: usize,
    rows: Vec<Face>,
}

/// Rows and column ordering exhibiting a lower unitriangular submatrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceWitness {
    pub columns: Vec<usize>,
    pub rows: Vec<usize>,
}

impl BooleanMatrix {
    pub fn from_zero_sets(n: usize, rows: Vec<Face>) -> Self {
        BooleanMatrix { n, rows }
    }

    /// Builds a matrix from explicit 0/1 rows.
    pub fn from_entries(entries: &[Vec<u8>]) -> Result<Self> {
        let n = entries.first().map_or(0, Vec::len);
        let mut rows = Vec::with_capacity(entries.len());
        for row in entries {
            if row.len() != n {
                return Err(Error::Parse("ragged matrix rows".into()));
            }
            let mut z = 0;
            for (v, &e) in row.iter().enumerate() {
                match e {
                    0 => z |= bits::bit(v),
                    1 => {}
                    _ => return Err(Error::Parse("matrix entries must be 0 or 1".into())),
                }
            }
            rows.push(z);
        }
        Ok(BooleanMatrix { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Face] {
        &self.rows
    }

    pub fn entry(&self, r: usize, v: usize) -> u8 {
        u8::from(self.rows[r] & bits::bit(v) == 0)
    }

    /// Rows as `0`/`1` strings.
    pub fn to_grid(&self) -> Vec<String> {
        (0..self.rows.len())
            .map(|r| (0..self.n).map(|v| char::from(b'0' + self.entry(r, v))).collect())
            .collect()
    }

    fn row_excluding(&self, prefix: Face, v: usize) -> Option<usize> {
        self.rows
            .iter()
            .position(|&z| bits::is_subset(prefix, z) && z & bits::bit(v) == 0)
    }

    /// Columns `x` are independent iff some ordering and rows give a lower
    /// unitriangular submatrix.
    pub fn is_independent(&self, x: Face) -> Option<IndependenceWitness> {
        fn go(
            m: &BooleanMatrix,
            x: Face,
            prefix: Face,
            w: &mut IndependenceWitness,
            dead: &mut FxHashSet<Face>,
        ) -> bool {
            if prefix == x {
                return true;
            }
            if dead.contains(&prefix) {
                return false;
            }
            for v in bits::indices(x & !prefix) {
                if let Some(r) = m.row_excluding(prefix, v) {
                    w.columns.push(v);
                    w.rows.push(r);
                    if go(m, x, prefix | bits::bit(v), w, dead) {
                        return true;
                    }
                    w.columns.pop();
                    w.rows.pop();
                }
            }
            dead.insert(prefix);
            false
        }
        let mut w = IndependenceWitness {
            columns: Vec::new(),
            rows: Vec::new(),
        };
        let mut dead = FxHashSet::default();
        go(self, x, 0, &mut w, &mut dead).then_some(w)
    }

    /// The complex of independent column sets.
    pub fn complex(&self) -> Result<Complex> {
        let all = bits::full(self.n);
        for v in 0..self.n {
            if self.row_excluding(0, v).is_none() {
                return Err(Error::domain(format!("column {} is all zero", v + 1)));
            }
        }
        let mut seen: FxHashSet<Face> = FxHashSet::default();
        seen.insert(0);
        let mut queue = VecDeque::from([0]);
        while let Some(s) = queue.pop_front() {
            for v in bits::indices(all & !s) {
                let t = s | bits::bit(v);
                if !seen.contains(&t) && self.row_excluding(s, v).is_some() {
                    seen.insert(t);
                    queue.push_back(t);
                }
            }
        }
        Complex::from_down_closed(self.n, &seen)
    }
}

/// `M(R)`: one row per member, sorted by bitmask.
pub fn matrix_of(r: &MooreFamily) -> BooleanMatrix {
    BooleanMatrix::from_zero_sets(r.n(), r.members().to_vec())
}

/// The complex of a boolean matrix.
pub fn complex_of_matrix(m: &BooleanMatrix) -> Result<Complex> {
    m.complex()
}

/// Maximal sets of size `>= d+1` containing no facet, for a paving complex.
pub fn maximal_long_hyperplanes(c: &Complex) -> Result<Vec<Face>> {
    let d = paving_dim(c)?;
    let facets = c.facets();
    let long = |x: Face| !facets.iter().any(|&b| bits::is_subset(b, x));
    let all = c.vertices();
    let mut seen: FxHashSet<Face> = FxHashSet::default();
    let mut queue: VecDeque<Face> = bits::p_k(c.n(), d + 1)
        .into_iter()
        .filter(|&x| long(x))
        .collect();
    seen.extend(queue.iter().copied());
    let mut maximal = Vec::new();
    while let Some(x) = queue.pop_front() {
        let mut grew = false;
        for p in bits::indices(all & !x) {
            let y = x | bits::bit(p);
            if long(y) {
                grew = true;
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        if !grew {
            maximal.push(x);
        }
    }
    maximal.sort_unstable();
    Ok(maximal)
}

fn paving_dim(c: &Complex) -> Result<usize> {
    match c.is_paving() {
        Some(d) if d >= 2 => Ok(d),
        _ => Err(Error::domain("needs a paving complex of dimension at least 2")),
    }
}

/// The three-way split of the maximal long hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HyperplanePartition {
    /// Flats meeting every other maximal long hyperplane in fewer than `d` points.
    pub isolated_flats: Vec<Face>,
    /// Non-flats meeting every other one in fewer than `d` points.
    pub isolated_nonflats: Vec<Face>,
    /// Non-flats meeting some other one in at least `d` points.
    pub overlapping: Vec<Face>,
}

pub fn long_hyperplane_partition(c: &Complex) -> Result<HyperplanePartition> {
    let d = paving_dim(c)?;
    let ls = maximal_long_hyperplanes(c)?;
    let mut out = HyperplanePartition::default();
    for &l in &ls {
        let overlaps = ls
            .iter()
            .any(|&m| m != l && bits::card(l & m) >= d);
        let flat = is_flat(c, l);
        match (flat, overlaps) {
            (true, false) => out.isolated_flats.push(l),
            (false, false) => out.isolated_nonflats.push(l),
            (false, true) => out.overlapping.push(l),
            (true, true) => {
                return Err(Error::domain(
                    "a flat maximal long hyperplane overlaps another in d points",
                ))
            }
        }
    }
    Ok(out)
}

/// `P_{<=d-1}(V) ∪ {A ∈ P_d(V) : A ∪ p ∈ H for all p ∉ A}`.
pub fn tess_core(c: &Complex) -> Result<SetFamily> {
    let d = paving_dim(c)?;
    let all = c.vertices();
    let mut members: Vec<Face> = (0..d).flat_map(|k| bits::p_k(c.n(), k)).collect();
    members.extend(
        bits::p_k(c.n(), d)
            .into_iter()
            .filter(|&a| bits::indices(all & !a).all(|p| c.is_face(a | bits::bit(p)))),
    );
    Ok(SetFamily::new(c.n(), members))
}

/// Flats of a paving complex from the long hyperplane description.
pub fn paving_flats(c: &Complex) -> Result<MooreFamily> {
    let part = long_hyperplane_partition(c)?;
    let core = tess_core(c)?;
    let members = core
        .iter()
        .chain(part.isolated_flats.iter().copied())
        .chain([c.vertices()]);
    Ok(MooreFamily::unchecked(c.n(), members.collect::<Vec<_>>()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::from_one_based as s;

    fn brute_flats(c: &Complex) -> Vec<Face> {
        let all = c.vertices();
        (0..=all)
            .filter(|&f| {
                c.faces().into_iter().filter(|&x| bits::is_subset(x, f)).all(|x| {
                    bits::indices(all & !f).all(|p| c.is_face(x | bits::bit(p)))
                })
            })
            .collect()
    }

    #[test]
    fn flats_of_u23_by_definition() {
        let u = Complex::uniform(2, 3).unwrap();
        let fl = flats(&u);
        assert_eq!(fl.members(), brute_flats(&u).as_slice());
        assert_eq!(fl.members(), &[0, 1, 2, 4, 7]);
    }

    #[test]
    fn closure_examples() {
        let far = Complex::new(4, [s(&[1, 2, 3])].into_iter().chain(bits::p_k(4, 2)))
            .unwrap();
        assert_eq!(flats(&far).members(), &[0, 1, 2, 4, 8, 15]);
        for &b in far.facets() {
            assert_eq!(closure(&far, b), far.vertices());
        }
        let v = is_boolean_representable(&far);
        assert!(!v.representable);
        assert_eq!(v.witness, Some(s(&[1, 2, 3])));
    }

    #[test]
    fn moore_close_of_two_pairs() {
        let f = SetFamily::new(3, [s(&[1, 2]), s(&[1, 3])]);
        assert_eq!(moore_close(&f).members(), &[0, 1, 3, 5, 7]);
        let trivial = SetFamily::new(3, [0, 7]);
        assert_eq!(moore_close(&trivial).members(), &[0, 7]);
    }

    #[test]
    fn matrix_of_trivial_family() {
        let r = MooreFamily::new(2, [0, 3]).unwrap();
        let m = matrix_of(&r);
        assert_eq!(m.to_grid(), vec!["11".to_string(), "00".to_string()]);
        assert_eq!(m.complex().unwrap(), Complex::uniform(1, 2).unwrap());
        assert!(m.is_independent(0).is_some());
    }

    #[test]
    fn transversal_complexes_of_chain_families() {
        let r = MooreFamily::new(4, [0, s(&[1]), s(&[2]), s(&[1, 2, 3]), 15]).unwrap();
        let r2 = MooreFamily::new(4, [0, s(&[4]), s(&[1, 4]), s(&[2, 4]), 15]).unwrap();
        let expected = Complex::new(
            4,
            bits::p_k(4, 3).into_iter().filter(|&x| x != s(&[1, 2, 3])),
        )
        .unwrap();
        assert_eq!(transversal_complex(&r).unwrap(), expected);
        assert_eq!(transversal_complex(&r2).unwrap(), expected);
        assert_eq!(
            complex_of_matrix(&matrix_of(&r)).unwrap(),
            transversal_complex(&r).unwrap()
        );
        assert_eq!(r.height(), 3);
    }

    #[test]
    fn loop_column_is_rejected() {
        let m = BooleanMatrix::from_entries(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert!(matches!(m.complex(), Err(Error::Domain(_))));
    }

    #[test]
    fn moore_validation() {
        assert!(MooreFamily::new(3, [0, 3, 5, 7]).is_err());
        assert!(MooreFamily::new(3, [3, 7]).is_err());
        assert!(MooreFamily::new(3, [0, 1, 3, 5, 7]).is_ok());
    }

    #[test]
    fn uniform_partition_is_empty() {
        let u = Complex::uniform(3, 4).unwrap();
        assert_eq!(
            long_hyperplane_partition(&u).unwrap(),
            HyperplanePartition::default()
        );
        let u5 = Complex::uniform(3, 5).unwrap();
        assert_eq!(tess_core(&u5).unwrap().len(), 1 + 5 + 10);
        assert_eq!(paving_flats(&u5).unwrap(), flats(&u5));
    }
}
