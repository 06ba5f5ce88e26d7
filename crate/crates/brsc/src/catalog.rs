//! Named complexes: fixed small examples, parametrized families, and the
//! matroids of group-labelled graphs.

use std::collections::{BTreeMap, VecDeque};

use rustc_hash::FxHashSet;

use crate::bits::{self, from_one_based as s, Face};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::lattice::{self, BooleanMatrix, MooreFamily};
use crate::operators;

/// A finite group given by its multiplication table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// The cyclic group `Z_m` written additively on `0..m`.
    pub fn cyclic(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("a group needs at least one element"));
        }
        Self::from_table((0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect())
    }

    /// Validates a Cayley table: closure, associativity, identity, inverses.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let m = table.len();
        if m == 0 || table.iter().any(|row| row.len() != m || row.iter().any(|&x| x >= m)) {
            return Err(Error::domain("Cayley table must be square with entries in 0..order"));
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::domain("Cayley table is not associative"));
                    }
                }
            }
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::domain("Cayley table has no identity"))?;
        let mut inverse = Vec::with_capacity(m);
        for (a, row) in table.iter().enumerate() {
            let b = (0..m)
                .find(|&b| row[b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::domain("Cayley table has an element without inverse"))?;
            inverse.push(b);
        }
        Ok(GroupTable { table, identity, inverse })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// First non-identity element in table order.
    pub fn first_nontrivial(&self) -> Option<usize> {
        (0..self.order()).find(|&a| a != self.identity)
    }
}

/// An atom of a group-labelled graph complex: an edge `i -g-> j` with
/// `i < j`, or a loop at `i` labelled `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Edge { i: usize, g: usize, j: usize },
    Loop { i: usize, y: usize },
}

impl Atom {
    /// The edge `i -g-> j`, stored with the smaller endpoint first.
    pub fn edge(group: &GroupTable, i: usize, g: usize, j: usize) -> Result<Atom> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Ok(Atom::Edge { i, g, j }),
            std::cmp::Ordering::Greater => Ok(Atom::Edge { i: j, g: group.inv(g), j: i }),
            std::cmp::Ordering::Equal => Err(Error::domain("an edge needs distinct endpoints")),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Atom::Edge { i, g, j } => format!("{}-{}-{}", i + 1, g, j + 1),
            Atom::Loop { i, y } => format!("{}-{}-{}", i + 1, y, i + 1),
        }
    }
}

/// Shape of one connected component of `Γ_0(Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub atoms: usize,
    pub loops: usize,
    /// Every cycle has label product `1`.
    pub balanced: bool,
}

/// A complex whose vertices are atoms over a group and `n` graph vertices.
#[derive(Clone, Debug)]
pub struct GainComplex {
    pub group: GroupTable,
    pub n: usize,
    pub atoms: Vec<Atom>,
    pub complex: Complex,
}

impl GainComplex {
    /// Connected components of the multigraph spanned by the atoms in `z`,
    /// isolated graph vertices included.
    pub fn components(&self, z: Face) -> Vec<Component> {
        components(&self.group, self.n, bits::indices(z).map(|a| self.atoms[a]))
    }
}

fn components(group: &GroupTable, n: usize, atoms: impl Iterator<Item = Atom>) -> Vec<Component> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut loops: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for a in atoms {
        match a {
            Atom::Edge { i, g, j } => {
                adj[i].push((j, g));
                adj[j].push((i, group.inv(g)));
                edges.push((i, g, j));
            }
            Atom::Loop { i, y } => loops[i].push(y),
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut pot = vec![group.identity(); n];
    let mut out: Vec<Component> = Vec::new();
    for root in 0..n {
        if comp[root] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[root] = id;
        let mut vertices = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, g) in &adj[u] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    pot[w] = group.mul(pot[u], g);
                    vertices.push(w);
                    queue.push_back(w);
                }
            }
        }
        vertices.sort_unstable();
        let nloops: usize = vertices.iter().map(|&v| loops[v].len()).sum();
        out.push(Component { vertices, atoms: nloops, loops: nloops, balanced: nloops == 0 });
    }
    for &(i, g, j) in &edges {
        let c = &mut out[comp[i]];
        c.atoms += 1;
        if pot[j] != group.mul(pot[i], g) {
            c.balanced = false;
        }
    }
    out
}

fn require_nontrivial(group: &GroupTable, n: usize) -> Result<()> {
    if group.order() < 2 {
        return Err(Error::domain("the group must be nontrivial"));
    }
    if n < 2 {
        return Err(Error::domain("at least two graph vertices are needed"));
    }
    Ok(())
}

fn gain_complex(
    group: &GroupTable,
    n: usize,
    atoms: Vec<Atom>,
    independent: impl Fn(&[Component]) -> bool,
) -> Result<GainComplex> {
    if atoms.len() > crate::complex::MAX_VERTICES {
        return Err(Error::capacity(format!("{} atoms exceed the vertex limit", atoms.len())));
    }
    let m = atoms.len();
    let mut faces: FxHashSet<Face> = FxHashSet::default();
    faces.insert(0);
    let mut layer = vec![0 as Face];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &z in &layer {
            let low = 64 - z.leading_zeros() as usize;
            for a in low..m {
                let y = z | bits::bit(a);
                if faces.contains(&y) {
                    continue;
                }
                let ok = bits::indices(y).all(|b| b == a || faces.contains(&(y & !bits::bit(b))))
                    && independent(&components(group, n, bits::indices(y).map(|b| atoms[b])));
                if ok {
                    faces.insert(y);
                    next.push(y);
                }
            }
        }
        layer = next;
    }
    let labels = atoms.iter().map(Atom::label).collect();
    let complex = Complex::from_down_closed(m, &faces)?.with_labels(labels)?;
    Ok(GainComplex { group: group.clone(), n, atoms, complex })
}

fn edge_atoms(group: &GroupTable, n: usize) -> Vec<Atom> {
    let mut atoms = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for g in 0..group.order() {
                atoms.push(Atom::Edge { i, g, j });
            }
        }
    }
    atoms
}

/// The matroid on edges `(i,g,j)` whose independent sets are forests plus at
/// most one unicyclic component carrying an unbalanced cycle.
pub fn rhodes_reduced(group: &GroupTable, n: usize) -> Result<GainComplex> {
    require_nontrivial(group, n)?;
    gain_complex(group, n, edge_atoms(group, n), |comps| {
        let mut cyclic = 0;
        for c in comps {
            if c.atoms + 1 > c.vertices.len() {
                if c.atoms > c.vertices.len() || c.balanced {
                    return false;
                }
                cyclic += 1;
            }
        }
        cyclic <= 1
    })
}

/// The Dowling matroid: edges `(i,g,j)` plus one loop per vertex labelled by
/// `loop_label`, independent when every component is a tree or an
/// unbalanced unicyclic graph.
pub fn dowling_with_loop_label(group: &GroupTable, n: usize, loop_label: usize) -> Result<GainComplex> {
    require_nontrivial(group, n)?;
    if loop_label == group.identity() || loop_label >= group.order() {
        return Err(Error::domain("loops need a non-identity label"));
    }
    let mut atoms: Vec<Atom> = (0..n).map(|i| Atom::Loop { i, y: loop_label }).collect();
    atoms.extend(edge_atoms(group, n));
    gain_complex(group, n, atoms, |comps| {
        comps.iter().all(|c| {
            c.atoms < c.vertices.len() || (c.atoms == c.vertices.len() && !c.balanced)
        })
    })
}

/// [`dowling_with_loop_label`] with the first non-identity element on loops.
pub fn dowling(group: &GroupTable, n: usize) -> Result<GainComplex> {
    let y = group
        .first_nontrivial()
        .ok_or_else(|| Error::domain("the group must be nontrivial"))?;
    dowling_with_loop_label(group, n, y)
}

/// `J(n,m,k) = P_1(V_n) ∪ P_{<=k}(V_m)`.
pub fn j_nmk(n: usize, m: usize, k: usize) -> Result<Complex> {
    if k == 0 || k > m || m > n {
        return Err(Error::domain("J(n,m,k) needs 1 <= k <= m <= n"));
    }
    Complex::new(n, bits::p_k(m, k))
}

/// `J(i,j,n) = B_2(1..i) ∪ B_2(1..j)` on `n` vertices.
pub fn j_ij(i: usize, j: usize, n: usize) -> Result<Complex> {
    if !(2 <= i && i < j && j < n) {
        return Err(Error::domain("J(i,j,n) needs 2 <= i < j < n"));
    }
    operators::b_d(n, bits::full(i), 2)?.union(&operators::b_d(n, bits::full(j), 2)?)
}

fn b2_union(n: usize, ls: &[&[usize]]) -> Result<Complex> {
    let mut acc = operators::b_d(n, s(ls[0]), 2)?;
    for l in &ls[1..] {
        acc = acc.union(&operators::b_d(n, s(l), 2)?)?;
    }
    Ok(acc)
}

/// The five six-point truncated non-representable paving classes.
pub fn six(case: usize) -> Result<Complex> {
    let base: &[usize] = &[1, 2, 3, 4];
    match case {
        1 => b2_union(6, &[base, &[1, 2]]),
        2 => b2_union(6, &[base, &[1, 2], &[1, 5]]),
        3 => b2_union(6, &[base, &[1, 2], &[1, 5], &[2, 5]]),
        4 => b2_union(6, &[base, &[1, 2], &[3, 5]]),
        5 => b2_union(6, &[base, &[1, 2], &[2, 5], &[3, 5]]),
        _ => Err(Error::domain("six-point case must be 1..=5")),
    }
}

/// `B_2(1234) ∪ B_2(23)`, a relabelling of [`six`]`(1)`.
pub fn six_prime() -> Result<Complex> {
    b2_union(6, &[&[1, 2, 3, 4], &[2, 3]])
}

/// Paving complex of dimension `d` on `(d+1)(d+2)` vertices, truncated
/// representable but not representable, all of whose one-point deletions
/// are representable.
pub fn swirl(d: usize) -> Result<Complex> {
    if !(2..=4).contains(&d) {
        return Err(Error::domain("swirl is built for 2 <= d <= 4"));
    }
    let k = d + 1;
    let n = k * (k + 1);
    let a = |i: usize| i;
    let b = |i: usize, t: usize| k + i * k + t;
    let mut labels: Vec<String> = (0..k).map(|i| format!("a{i}")).collect();
    for i in 0..k {
        labels.extend((0..k).map(|t| format!("b{i}{t}")));
    }
    let mut defect = FxHashSet::default();
    for i in 0..k {
        let a_i = (0..k).filter(|&x| x != i).fold(0, |m, x| m | bits::bit(a(x)));
        let b_rest = (1..k).fold(0, |m, t| m | bits::bit(b(i, t)));
        defect.extend(bits::k_subsets(a_i | b_rest, k));
        defect.insert((0..k).fold(0, |m, t| m | bits::bit(b(i, t))));
    }
    let defect: Vec<Face> = defect.into_iter().collect();
    Complex::paving_from_defect(n, d, &defect)?.with_labels(labels)
}

/// Paving complex of dimension 2 on `n + 9` vertices built from three
/// chains of consecutive missing triangles sharing their endpoints.
pub fn nfb(n: usize) -> Result<Complex> {
    if n < 3 {
        return Err(Error::domain("nfb needs n >= 3"));
    }
    let mut labels: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    labels.extend((2..=5).map(|i| format!("y{i}")));
    labels.extend((2..=5).map(|i| format!("z{i}")));
    let x = |i: usize| i;
    let y = |i: usize| match i {
        0 => x(0),
        1 => x(n),
        6 => x(1),
        _ => n + 1 + (i - 2),
    };
    let z = |i: usize| match i {
        0 => x(1),
        1 => x(n),
        6 => x(0),
        _ => n + 5 + (i - 2),
    };
    let tri = |a: usize, b: usize, c: usize| bits::bit(a) | bits::bit(b) | bits::bit(c);
    let mut defect: Vec<Face> = (0..=n - 2).map(|i| tri(x(i), x(i + 1), x(i + 2))).collect();
    defect.extend((0..=4).map(|i| tri(y(i), y(i + 1), y(i + 2))));
    defect.extend((0..=4).map(|i| tri(z(i), z(i + 1), z(i + 2))));
    Complex::paving_from_defect(n + 9, 2, &defect)?.with_labels(labels)
}

/// The Desargues complex: subforests of `K_5` with at most three edges,
/// on the ten edges `12, 13, ..., 45`.
pub fn desargues() -> Result<Complex> {
    let (edges, labels) = k5_edges();
    let triangles: Vec<Face> = k5_triangles(&edges);
    Complex::paving_from_defect(10, 2, &triangles)?.with_labels(labels)
}

/// [`desargues`] together with the triangle `{34, 35, 45}`.
pub fn non_desargues() -> Result<Complex> {
    let (edges, labels) = k5_edges();
    let l0 = edge_set(&edges, &[(3, 4), (3, 5), (4, 5)]);
    let triangles: Vec<Face> = k5_triangles(&edges).into_iter().filter(|&t| t != l0).collect();
    Complex::paving_from_defect(10, 2, &triangles)?.with_labels(labels)
}

fn k5_edges() -> (Vec<(usize, usize)>, Vec<String>) {
    let mut edges = Vec::new();
    for a in 1..=5 {
        for b in a + 1..=5 {
            edges.push((a, b));
        }
    }
    let labels = edges.iter().map(|(a, b)| format!("{a}{b}")).collect();
    (edges, labels)
}

fn edge_set(edges: &[(usize, usize)], which: &[(usize, usize)]) -> Face {
    which
        .iter()
        .map(|e| bits::bit(edges.iter().position(|x| x == e).expect("edge of K5")))
        .fold(0, |a, b| a | b)
}

fn k5_triangles(edges: &[(usize, usize)]) -> Vec<Face> {
    let mut out = Vec::new();
    for a in 1..=5 {
        for b in a + 1..=5 {
            for c in b + 1..=5 {
                out.push(edge_set(edges, &[(a, b), (a, c), (b, c)]));
            }
        }
    }
    out
}

/// The boolean matrix with all fifteen nonzero columns of length 4.
/// Column labels list the coordinates top to bottom, e.g. `1000`.
pub fn bfour_matrix() -> (BooleanMatrix, Vec<String>) {
    let cols: Vec<usize> = (1..16).collect();
    let labels = cols
        .iter()
        .map(|&v| (0..4).map(|r| if v >> r & 1 == 1 { '1' } else { '0' }).collect())
        .collect();
    let rows = (0..4)
        .map(|r| {
            cols.iter()
                .enumerate()
                .filter(|&(_, &v)| v >> r & 1 == 0)
                .fold(0, |m, (c, _)| m | bits::bit(c))
        })
        .collect();
    (BooleanMatrix::from_zero_sets(15, rows), labels)
}

/// The complex of independent column sets of [`bfour_matrix`].
pub fn bfour() -> Result<Complex> {
    let (m, labels) = bfour_matrix();
    m.complex()?.with_labels(labels)
}

fn lhne() -> Result<Complex> {
    let labels: Vec<String> = (0..10).map(|i| i.to_string()).collect();
    let f = |v: &[usize]| bits::from_indices(v);
    let mut defect = vec![f(&[1, 2, 3]), f(&[3, 4, 5]), f(&[7, 8, 9]), f(&[8, 9, 0])];
    defect.extend((0..10).filter(|p| *p != 5 && *p != 6).map(|p| f(&[5, 6, p])));
    Complex::paving_from_defect(10, 2, &defect)?.with_labels(labels)
}

fn cepc() -> Result<Complex> {
    let v = |i: usize, k: usize| 3 * ((i - 1) % 3) + k;
    let next = |i: usize| i % 3 + 1;
    let mut labels = Vec::new();
    for i in 1..=3 {
        for k in 0..3 {
            labels.push(format!("{i}{}", "'".repeat(k)));
        }
    }
    let face = |xs: &[usize]| bits::from_indices(xs);
    let mut z = FxHashSet::default();
    for i in 1..=3 {
        let j = next(i);
        z.insert(face(&[v(i, 0), v(j, 0), v(j, 1)]));
        z.insert(face(&[v(i, 2), v(j, 0), v(j, 1)]));
    }
    let mut gens: Vec<Face> = bits::p_k(9, 3).into_iter().filter(|x| !z.contains(x)).collect();
    for i in 1..=3 {
        let j = next(i);
        let block = face(&[v(i, 0), v(i, 2), v(j, 0), v(j, 1)]);
        for p in bits::indices(bits::full(9) & !block) {
            gens.push(face(&[v(i, 0), v(i, 2), v(j, 0), p]));
            gens.push(face(&[v(i, 0), v(i, 2), v(j, 1), p]));
        }
    }
    Complex::new(9, gens)?.with_labels(labels)
}

/// The Moore family behind the `cepct` example.
pub fn cepct_family() -> MooreFamily {
    let members = [
        0,
        s(&[1]),
        s(&[3]),
        s(&[1, 7]),
        s(&[3, 4]),
        s(&[1, 7, 8]),
        s(&[1, 2, 3, 4, 5]),
        bits::full(8),
    ];
    MooreFamily::new(8, members).expect("closed under intersection")
}

/// Defects of the ten six-point maximal non-going-up classes, in order.
pub fn mngu6_defect(i: usize) -> Result<Vec<Face>> {
    let t: &[&[usize]] = match i {
        1 => &[&[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[3, 5, 6]],
        2 => &[&[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[4, 5, 6]],
        3 => &[&[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[1, 3, 5], &[2, 4, 5]],
        4 => &[&[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[1, 4, 5], &[2, 4, 5], &[3, 4, 5]],
        5 => &[&[1, 2, 3], &[1, 3, 4], &[1, 2, 5], &[3, 4, 6]],
        6 => &[&[1, 2, 3], &[1, 3, 4], &[2, 5, 6], &[3, 4, 6]],
        7 => &[&[1, 2, 3], &[1, 3, 4], &[2, 4, 5], &[3, 5, 6]],
        8 => &[&[1, 2, 3], &[1, 3, 4], &[2, 3, 5], &[3, 4, 6], &[3, 5, 6]],
        9 => &[&[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[2, 3, 5], &[2, 4, 5]],
        10 => &[&[1, 2, 3], &[1, 4, 6], &[2, 4, 5], &[3, 5, 6]],
        _ => return Err(Error::domain("six-point maximal non-going-up classes are 1..=10")),
    };
    Ok(t.iter().map(|x| s(x)).collect())
}

fn paving6(defect: &[&[usize]]) -> Result<Complex> {
    let d: Vec<Face> = defect.iter().map(|x| s(x)).collect();
    Complex::paving_from_defect(6, 2, &d)
}

/// Parameters for [`named`], as `key=value` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, usize>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: usize) -> Self {
        self.0.insert(key.to_string(), value);
        self
    }

    /// Parses `key=value` tokens.
    pub fn parse<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let mut out = Params::new();
        for t in tokens {
            let t = t.as_ref();
            let (k, v) = t
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {t:?}")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("parameter {k} must be a nonnegative integer")))?;
            out.0.insert(k.trim().to_string(), v);
        }
        Ok(out)
    }

    fn get(&self, key: &str, default: usize) -> usize {
        self.0.get(key).copied().unwrap_or(default)
    }
}

/// One generator of the registry.
pub struct Entry {
    pub name: &'static str,
    /// Parameter names with their defaults.
    pub params: &'static [(&'static str, usize)],
    pub about: &'static str,
    build: fn(&Params) -> Result<Complex>,
}

impl Entry {
    pub fn build(&self, p: &Params) -> Result<Complex> {
        if let Some(k) = p.0.keys().find(|k| !self.params.iter().any(|(n, _)| n == k)) {
            return Err(Error::domain(format!("{} takes no parameter {k:?}", self.name)));
        }
        (self.build)(p)
    }
}

macro_rules! entry {
    ($name:expr, [$($k:expr => $v:expr),*], $about:expr, $f:expr) => {
        Entry { name: $name, params: &[$(($k, $v)),*], about: $about, build: $f }
    };
}

fn group_param(p: &Params) -> Result<GroupTable> {
    GroupTable::cyclic(p.get("g", 2))
}

static REGISTRY: &[Entry] = &[
    entry!("uniform", ["k" => 2, "n" => 4], "U_{k,n}: all sets of size at most k", |p| {
        Complex::uniform(p.get("k", 2), p.get("n", 4))
    }),
    entry!("jnmk", ["n" => 16, "m" => 6, "k" => 3], "P_1(V_n) ∪ P_{<=k}(V_m)", |p| {
        j_nmk(p.get("n", 16), p.get("m", 6), p.get("k", 3))
    }),
    entry!("jij", ["i" => 2, "j" => 3, "n" => 6], "B_2(1..i) ∪ B_2(1..j) on n points", |p| {
        j_ij(p.get("i", 2), p.get("j", 3), p.get("n", 6))
    }),
    entry!("bd", ["n" => 6, "l" => 4, "d" => 2], "B_d(V_n, 1..l)", |p| {
        operators::b_d(p.get("n", 6), bits::full(p.get("l", 4)), p.get("d", 2))
    }),
    entry!("six", ["case" => 1], "six-point truncated non-representable class 1..5", |p| {
        six(p.get("case", 1))
    }),
    entry!("six-prime", [], "B_2(1234) ∪ B_2(23)", |_| six_prime()),
    entry!("swirl", ["d" => 2], "paving swirl on (d+1)(d+2) points", |p| swirl(p.get("d", 2))),
    entry!("nfb", ["n" => 6], "three fused chains of missing triangles, n+9 points", |p| {
        nfb(p.get("n", 6))
    }),
    entry!("cfup", [], "P_1 ∪ {12, 34} on 4 points", |_| Complex::new(4, [s(&[1, 2]), s(&[3, 4])])),
    entry!("exs", [], "facets 123, 345 on 5 points", |_| {
        Complex::new(5, [s(&[1, 2, 3]), s(&[3, 4, 5])])
    }),
    entry!("exs-up", [], "up of exs", |_| {
        Ok(operators::up(&Complex::new(5, [s(&[1, 2, 3]), s(&[3, 4, 5])])?))
    }),
    entry!("btbtwo", [], "P_2 ∪ {|X ∩ 56| = 1} ∪ {123, 124} on 6 points", |_| btbtwo()),
    entry!("nonun-h1", [], "P_2 on 5 points", |_| Complex::uniform(2, 5)),
    entry!("nonun-h2", [], "P_1 ∪ {13,14,23,24,135,145,235,245} on 5 points", |_| nonun_h2()),
    entry!("nonun", [], "union of nonun-h1 and nonun-h2", |_| {
        Complex::uniform(2, 5)?.union(&nonun_h2()?)
    }),
    entry!("ncu-h1", [], "P_2 ∪ {123,124,125,126} on 6 points", |_| ncu_h1()),
    entry!("ncu-h2", [], "P_2 ∪ {|X ∩ 56| = 1} on 6 points", |_| ncu_h2()),
    entry!("ncu", [], "union of ncu-h1 and ncu-h2", |_| ncu_h1()?.union(&ncu_h2()?)),
    entry!("lhne", [], "paving on 0..9 missing 123, 345, 789, 890 and 56p", |_| lhne()),
    entry!("far", [], "P_2 ∪ {123} on 4 points", |_| {
        Complex::new(4, bits::p_k(4, 2).into_iter().chain([s(&[1, 2, 3])]))
    }),
    entry!("triang", [], "P_3 minus 124, 135, 236 on 6 points", |_| {
        paving6(&[&[1, 2, 4], &[1, 3, 5], &[2, 3, 6]])
    }),
    entry!("sme", [], "P_3 minus 456 on 6 points", |_| paving6(&[&[4, 5, 6]])),
    entry!("boom", [], "P_3 ∪ {4-sets with three consecutive points} on 6 points", |_| boom()),
    entry!("tracks", [], "P_2 ∪ {3-sets containing 12, 23, 45, 56 or 67} on 7 points", |_| tracks()),
    entry!("cepc", [], "representable complex whose pure 3-truncation is not", |_| cepc()),
    entry!("cepct", [], "J(R) for R = {∅,1,3,17,34,178,12345,V}", |_| {
        lattice::transversal_complex(&cepct_family())
    }),
    entry!("bfour", [], "independent column sets of the 4 x 15 boolean module", |_| bfour()),
    entry!("desargues", [], "subforests of K_5 with at most 3 edges", |_| desargues()),
    entry!("non-desargues", [], "desargues plus the triangle {34,35,45}", |_| non_desargues()),
    entry!("rhodes", ["g" => 2, "n" => 3], "Rhodes matroid over Z_g on n graph vertices", |p| {
        Ok(rhodes_reduced(&group_param(p)?, p.get("n", 3))?.complex)
    }),
    entry!("dowling", ["g" => 2, "n" => 3], "Dowling matroid over Z_g on n graph vertices", |p| {
        Ok(dowling(&group_param(p)?, p.get("n", 3))?.complex)
    }),
    entry!("mngu6", ["i" => 1], "six-point maximal non-going-up class 1..10", |p| {
        Complex::paving_from_defect(6, 2, &mngu6_defect(p.get("i", 1))?)
    }),
];

fn btbtwo() -> Result<Complex> {
    let mut gens: Vec<Face> = bits::p_k(6, 3)
        .into_iter()
        .filter(|&x| bits::card(x & s(&[5, 6])) == 1)
        .collect();
    gens.extend([s(&[1, 2, 3]), s(&[1, 2, 4])]);
    gens.extend(bits::p_k(6, 2));
    Complex::new(6, gens)
}

fn nonun_h2() -> Result<Complex> {
    Complex::new(
        5,
        [[1, 3, 5], [1, 4, 5], [2, 3, 5], [2, 4, 5]].iter().map(|x| s(x)).chain([
            s(&[1, 3]),
            s(&[1, 4]),
            s(&[2, 3]),
            s(&[2, 4]),
        ]),
    )
}

fn ncu_h1() -> Result<Complex> {
    let gens = (3..=6).map(|p| s(&[1, 2, p])).chain(bits::p_k(6, 2));
    Complex::new(6, gens)
}

fn ncu_h2() -> Result<Complex> {
    let gens = bits::p_k(6, 3)
        .into_iter()
        .filter(|&x| bits::card(x & s(&[5, 6])) == 1)
        .chain(bits::p_k(6, 2));
    Complex::new(6, gens)
}

fn boom() -> Result<Complex> {
    let runs: Vec<Face> = (1..=4).map(|i| s(&[i, i + 1, i + 2])).collect();
    let gens = bits::p_k(6, 4)
        .into_iter()
        .filter(|&x| runs.iter().any(|&r| bits::is_subset(r, x)))
        .chain(bits::p_k(6, 3));
    Complex::new(6, gens)
}

fn tracks() -> Result<Complex> {
    let pairs: Vec<Face> = [[1, 2], [2, 3], [4, 5], [5, 6], [6, 7]].iter().map(|x| s(x)).collect();
    let gens = bits::p_k(7, 3)
        .into_iter()
        .filter(|&x| pairs.iter().any(|&r| bits::is_subset(r, x)))
        .chain(bits::p_k(7, 2));
    Complex::new(7, gens)
}

/// Every generator, in listing order.
pub fn registry() -> &'static [Entry] {
    REGISTRY
}

/// Builds a named complex.
pub fn named(name: &str, params: &Params) -> Result<Complex> {
    match REGISTRY.iter().find(|e| e.name == name) {
        Some(e) => e.build(params),
        None => {
            let names: Vec<&str> = REGISTRY.iter().map(|e| e.name).collect();
            Err(Error::domain(format!("unknown complex {name:?}; known: {}", names.join(", "))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::t_operator;

    fn get(name: &str) -> Complex {
        named(name, &Params::new()).unwrap()
    }

    #[test]
    fn every_entry_builds_with_defaults() {
        for e in registry() {
            let c = e.build(&Params::new()).unwrap();
            assert!(c.n() >= 1, "{}", e.name);
        }
        assert!(matches!(named("nope", &Params::new()), Err(Error::Domain(_))));
        assert!(named("six", &Params::new().with("case", 9)).is_err());
        assert!(named("far", &Params::new().with("x", 1)).is_err());
    }

    #[test]
    fn group_tables_are_validated() {
        let z3 = GroupTable::cyclic(3).unwrap();
        assert_eq!(z3.inv(1), 2);
        assert_eq!(z3.first_nontrivial(), Some(1));
        assert!(GroupTable::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        let e = Atom::edge(&z3, 2, 1, 0).unwrap();
        assert_eq!(e, Atom::Edge { i: 0, g: 2, j: 2 });
    }

    #[test]
    fn counting_functions_of_parametrized_families() {
        let j = j_nmk(16, 6, 3).unwrap();
        assert_eq!(j.counting_function().alpha, vec![1, 16, 15, 20]);
        assert_eq!(get("swirl").n(), 12);
        let d = desargues().unwrap();
        assert_eq!(d.counting_function().alpha, vec![1, 10, 45, 110]);
    }

    #[test]
    fn six_point_cases_have_the_listed_defects() {
        let want: [&[&[usize]]; 5] = [
            &[&[1, 3, 4], &[2, 3, 4], &[1, 5, 6], &[2, 5, 6], &[3, 5, 6], &[4, 5, 6]],
            &[&[1, 3, 4], &[2, 3, 4], &[2, 5, 6], &[3, 5, 6], &[4, 5, 6]],
            &[&[1, 3, 4], &[2, 3, 4], &[3, 5, 6], &[4, 5, 6]],
            &[&[1, 3, 4], &[2, 3, 4], &[1, 5, 6], &[2, 5, 6], &[4, 5, 6]],
            &[&[1, 3, 4], &[2, 3, 4], &[1, 5, 6], &[4, 5, 6]],
        ];
        for (case, w) in want.iter().enumerate() {
            let mut d: Vec<Face> = w.iter().map(|x| s(x)).collect();
            d.sort_unstable();
            assert_eq!(six(case + 1).unwrap().defect().unwrap().members(), &d[..]);
        }
    }

    #[test]
    fn nfb_has_n_plus_nine_points() {
        let c = nfb(6).unwrap();
        assert_eq!(c.n(), 15);
        assert_eq!(c.defect().unwrap().len(), 5 + 5 + 5);
    }

    #[test]
    fn cepc_misses_exactly_the_six_triangles() {
        let c = cepc().unwrap();
        assert_eq!(c.faces_of_size(3).len(), 84 - 6);
        assert!(c.is_face(c.parse_face("1',2',2''").unwrap()));
        assert!(lattice::is_boolean_representable(&c).representable);
    }

    #[test]
    fn bfour_named_columns() {
        let c = bfour().unwrap();
        assert!(c.is_pure());
        assert_eq!(c.dim(), 3);
        let f = |x: &str| c.parse_face(x).unwrap();
        assert!(c.is_face(f("1000,1110,1101")));
        assert!(!c.is_face(f("1000,1110,0110")));
    }

    #[test]
    fn k5_forest_complex_is_paving() {
        let d = desargues().unwrap();
        assert_eq!(d.is_paving(), Some(2));
        let nd = non_desargues().unwrap();
        assert!(nd.is_face(nd.parse_face("34,35,45").unwrap()));
        assert!(!d.is_face(d.parse_face("34,35,45").unwrap()));
    }

    fn set_partitions(n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for v in 0..n {
            let mut next = Vec::new();
            for p in &out {
                let blocks = p.iter().copied().max().map_or(0, |m| m + 1);
                for b in 0..=blocks {
                    let mut q = p.clone();
                    q.push(b);
                    next.push(q);
                }
                let _ = v;
            }
            out = next;
        }
        out
    }

    fn is_balanced_clique_union(gc: &GainComplex, z: Face) -> bool {
        let comps = gc.components(z);
        comps.iter().all(|c| {
            let v = c.vertices.len();
            c.balanced && c.loops == 0 && c.atoms == v * (v - 1) / 2
        }) && {
            let mut seen = FxHashSet::default();
            bits::indices(z).all(|a| match gc.atoms[a] {
                Atom::Edge { i, j, .. } => seen.insert((i, j)),
                Atom::Loop { .. } => false,
            })
        }
    }

    #[test]
    fn rhodes_flats_match_partition_description() {
        for (m, n) in [(2, 3), (3, 3)] {
            let g = GroupTable::cyclic(m).unwrap();
            let gc = rhodes_reduced(&g, n).unwrap();
            let h = &gc.complex;
            assert_eq!(h.dim(), n - 1);
            let mut want = FxHashSet::default();
            for p in set_partitions(n) {
                let z = gc
                    .atoms
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| matches!(a, Atom::Edge { i, j, .. } if p[*i] == p[*j]))
                    .fold(0, |m, (k, _)| m | bits::bit(k));
                want.insert(z);
            }
            for z in 0..(1u64 << h.n()) {
                if is_balanced_clique_union(&gc, z) {
                    want.insert(z);
                }
            }
            let fl = lattice::flats(h);
            assert_eq!(fl.len(), want.len());
            assert!(fl.iter().all(|f| want.contains(&f)));
        }
    }

    #[test]
    fn dowling_flats_match_description() {
        let g = GroupTable::cyclic(2).unwrap();
        let gc = dowling(&g, 3).unwrap();
        let h = &gc.complex;
        assert_eq!(h.n(), 9);
        assert_eq!(h.dim(), 2);
        let mut want = FxHashSet::default();
        for z in 0..(1u64 << h.n()) {
            let w: Vec<usize> = bits::indices(z)
                .filter_map(|a| match gc.atoms[a] {
                    Atom::Loop { i, .. } => Some(i),
                    _ => None,
                })
                .collect();
            let full = gc
                .atoms
                .iter()
                .enumerate()
                .filter(|(_, a)| match **a {
                    Atom::Loop { i, .. } => w.contains(&i),
                    Atom::Edge { i, j, .. } => w.contains(&i) && w.contains(&j),
                })
                .fold(0, |m, (k, _)| m | bits::bit(k));
            if z & full != full {
                continue;
            }
            let rest = z & !full;
            let touches_w = bits::indices(rest).any(|a| match gc.atoms[a] {
                Atom::Edge { i, j, .. } => w.contains(&i) || w.contains(&j),
                Atom::Loop { .. } => true,
            });
            if !touches_w {
                let comps = gc.components(rest);
                let ok = comps.iter().filter(|c| !c.vertices.iter().any(|v| w.contains(v))).all(|c| {
                    let v = c.vertices.len();
                    c.balanced && c.atoms == v * (v - 1) / 2
                });
                if ok {
                    want.insert(z);
                }
            }
        }
        let fl = lattice::flats(h);
        assert_eq!(fl.len(), want.len());
        assert!(fl.iter().all(|f| want.contains(&f)));
    }

    #[test]
    fn dowling_loop_label_does_not_matter() {
        let g = GroupTable::cyclic(3).unwrap();
        let a = dowling_with_loop_label(&g, 3, 1).unwrap().complex;
        let b = dowling_with_loop_label(&g, 3, 2).unwrap().complex;
        assert_eq!(a.facets(), b.facets());
    }

    #[test]
    fn small_gain_complexes() {
        let z2 = GroupTable::cyclic(2).unwrap();
        let r = rhodes_reduced(&z2, 2).unwrap().complex;
        assert_eq!((r.n(), r.dim()), (2, 1));
        assert!(rhodes_reduced(&GroupTable::cyclic(1).unwrap(), 3).is_err());
        let d = dowling(&z2, 2).unwrap().complex;
        assert_eq!(d.n(), 4);
        assert_eq!(d.dim(), 1);
    }

    #[test]
    fn nfb_is_not_truncated_representable_but_its_deletions_are() {
        let c = nfb(6).unwrap();
        assert!(!t_operator::is_tbrsc(&c));
        for v in 0..c.n() {
            let r = c.restriction(c.vertices() & !bits::bit(v)).unwrap();
            assert!(t_operator::is_tbrsc(&r), "deleting {}", c.labels()[v]);
        }
    }
}
