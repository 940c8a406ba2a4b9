//! Finite abstract simplicial complexes in two encodings: flag complexes
//! (faces are the cliques of a graph) and explicit complexes (given by their
//! maximal faces).

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::ComplexError;

/// Default cap on the number of faces any single enumeration may produce.
pub const DEFAULT_FACE_BUDGET: usize = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)] }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn minus(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect() }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| crate::tube::bits(w).map(move |i| 64 * k + i))
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }
}

#[derive(Clone, Debug)]
enum Faces {
    /// Symmetric adjacency; faces are cliques.
    Flag(Vec<BitSet>),
    /// Maximal faces, each sorted; `[[]]` for the complex `{∅}`.
    Explicit(Vec<Vec<usize>>),
}

/// An abstract simplicial complex on labelled vertices. A complex with no
/// vertices is `{∅}`.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    faces: Faces,
}

impl SimplicialComplex {
    /// The complex `{∅}`.
    pub fn empty() -> Self {
        SimplicialComplex { labels: Vec::new(), faces: Faces::Explicit(vec![Vec::new()]) }
    }

    /// Flag complex of the graph on `labels` with the given edges.
    pub fn flag(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let n = labels.len();
        let mut adj = vec![BitSet::new(n); n];
        for (a, b) in edges {
            assert!(a != b && a < n && b < n, "bad edge ({a}, {b})");
            adj[a].insert(b);
            adj[b].insert(a);
        }
        SimplicialComplex { labels, faces: Faces::Flag(adj) }
    }

    /// Complex generated by `facets`; non-maximal entries are dropped. Every
    /// vertex must lie in some facet.
    pub fn from_facets(labels: Vec<String>, facets: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut sets: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                assert!(f.iter().all(|&v| v < labels.len()), "facet vertex out of range");
                f
            })
            .collect();
        sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        let mut kept: Vec<Vec<usize>> = Vec::new();
        for f in sets {
            if !kept.iter().any(|k| is_subset(&f, k)) {
                kept.push(f);
            }
        }
        if kept.is_empty() {
            kept.push(Vec::new());
        }
        kept.sort();
        let covered: BTreeSet<usize> = kept.iter().flatten().copied().collect();
        assert_eq!(covered.len(), labels.len(), "every vertex must lie in a facet");
        SimplicialComplex { labels, faces: Faces::Explicit(kept) }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_flag(&self) -> bool {
        matches!(self.faces, Faces::Flag(_))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        match &self.faces {
            Faces::Flag(adj) => adj[a].contains(b),
            Faces::Explicit(fs) => fs.iter().any(|f| f.contains(&a) && f.contains(&b)),
        }
    }

    /// All faces with at most `max_size` vertices, grouped by size. Level 0
    /// holds the empty face; each face is a sorted vertex list.
    pub fn faces(&self, max_size: Option<usize>, budget: usize) -> Result<Vec<Vec<Vec<usize>>>, ComplexError> {
        let cap = max_size.unwrap_or(usize::MAX);
        let mut levels: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
        let mut count = 1usize;
        match &self.faces {
            Faces::Flag(adj) => {
                let n = self.labels.len();
                let mut stack: Vec<(Vec<usize>, BitSet)> = Vec::new();
                for v in (0..n).rev() {
                    let mut later = adj[v].clone();
                    for u in 0..=v {
                        later.remove(u);
                    }
                    stack.push((vec![v], later));
                }
                // depth-first, but stored per level so the output order is
                // deterministic regardless of traversal
                while let Some((face, cand)) = stack.pop() {
                    count += 1;
                    if count > budget {
                        return Err(ComplexError::FaceBudgetExceeded(budget));
                    }
                    let k = face.len();
                    if levels.len() <= k {
                        levels.resize(k + 1, Vec::new());
                    }
                    if k < cap {
                        let next: Vec<usize> = cand.iter().collect();
                        for &w in next.iter().rev() {
                            let mut f = face.clone();
                            f.push(w);
                            let mut c = cand.intersect(&adj[w]);
                            for u in cand.iter().take_while(|&u| u <= w) {
                                c.remove(u);
                            }
                            stack.push((f, c));
                        }
                    }
                    levels[k].push(face);
                }
            }
            Faces::Explicit(facets) => {
                let mut seen: HashSet<Vec<usize>> = HashSet::new();
                for f in facets {
                    let m = f.len().min(cap);
                    for size in 1..=m {
                        for sub in combinations(f, size) {
                            if seen.insert(sub.clone()) {
                                count += 1;
                                if count > budget {
                                    return Err(ComplexError::FaceBudgetExceeded(budget));
                                }
                                if levels.len() <= size {
                                    levels.resize(size + 1, Vec::new());
                                }
                                levels[size].push(sub);
                            }
                        }
                    }
                }
            }
        }
        for level in &mut levels {
            level.sort_unstable();
        }
        Ok(levels)
    }

    /// Face counts by size; index 0 counts the empty face.
    pub fn f_vector(&self, budget: usize) -> Result<Vec<usize>, ComplexError> {
        Ok(self.faces(None, budget)?.iter().map(Vec::len).collect())
    }

    /// Maximal faces, sorted. For flag complexes these are the maximal
    /// cliques (Bron–Kerbosch with pivoting).
    pub fn maximal_faces(&self, budget: usize) -> Result<Vec<Vec<usize>>, ComplexError> {
        match &self.faces {
            Faces::Explicit(fs) => Ok(fs.clone()),
            Faces::Flag(adj) => {
                let n = self.labels.len();
                if n == 0 {
                    return Ok(vec![Vec::new()]);
                }
                let mut all = BitSet::new(n);
                for v in 0..n {
                    all.insert(v);
                }
                let mut out = Vec::new();
                let mut r = Vec::new();
                bron_kerbosch(adj, &mut r, all, BitSet::new(n), &mut out, budget)?;
                for f in &mut out {
                    f.sort_unstable();
                }
                out.sort();
                Ok(out)
            }
        }
    }

    /// The same complex given by its maximal faces.
    pub fn to_explicit(&self, budget: usize) -> Result<SimplicialComplex, ComplexError> {
        Ok(SimplicialComplex { labels: self.labels.clone(), faces: Faces::Explicit(self.maximal_faces(budget)?) })
    }

    /// For a flag complex, the induced subcomplex left after repeatedly
    /// deleting a vertex `v` whose closed neighbourhood lies inside that of
    /// another vertex `w`. The link of `v` is then a cone on `w`, so each
    /// deletion preserves the homotopy type. Other complexes are returned
    /// unchanged.
    pub fn strong_core(&self) -> SimplicialComplex {
        let Faces::Flag(adj) = &self.faces else {
            return self.clone();
        };
        let n = self.labels.len();
        let mut closed = adj.clone();
        for (v, row) in closed.iter_mut().enumerate() {
            row.insert(v);
        }
        let mut alive = BitSet::new(n);
        (0..n).for_each(|v| alive.insert(v));
        let mut changed = true;
        while changed {
            changed = false;
            for v in 0..n {
                if !alive.contains(v) {
                    continue;
                }
                let nv = closed[v].intersect(&alive);
                let dominated = nv.iter().any(|w| w != v && nv.minus(&closed[w]).is_empty());
                if dominated {
                    alive.remove(v);
                    changed = true;
                }
            }
        }
        let keep: Vec<usize> = alive.iter().collect();
        if keep.len() == n {
            self.clone()
        } else {
            self.induced(&keep)
        }
    }

    /// Induced subcomplex on the listed vertices (in the given order).
    pub fn induced(&self, keep: &[usize]) -> SimplicialComplex {
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        match &self.faces {
            Faces::Flag(adj) => {
                let mut edges = Vec::new();
                for (x, &i) in keep.iter().enumerate() {
                    for (y, &j) in keep.iter().enumerate().skip(x + 1) {
                        if adj[i].contains(j) {
                            edges.push((x, y));
                        }
                    }
                }
                SimplicialComplex::flag(labels, edges)
            }
            Faces::Explicit(fs) => {
                let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(x, &i)| (i, x)).collect();
                let facets: Vec<Vec<usize>> =
                    fs.iter().map(|f| f.iter().filter_map(|v| pos.get(v).copied()).collect()).collect();
                SimplicialComplex::from_facets(labels, facets)
            }
        }
    }

    /// Simplicial join; vertex labels must be disjoint.
    pub fn join(&self, other: &SimplicialComplex, budget: usize) -> Result<SimplicialComplex, ComplexError> {
        let own: HashSet<&String> = self.labels.iter().collect();
        if let Some(l) = other.labels.iter().find(|l| own.contains(l)) {
            return Err(ComplexError::VertexClash(l.clone()));
        }
        let shift = self.labels.len();
        let labels: Vec<String> = self.labels.iter().chain(&other.labels).cloned().collect();
        if let (Faces::Flag(a), Faces::Flag(b)) = (&self.faces, &other.faces) {
            let mut edges = Vec::new();
            for (i, row) in a.iter().enumerate() {
                edges.extend(row.iter().filter(|&j| j > i).map(|j| (i, j)));
            }
            for (i, row) in b.iter().enumerate() {
                edges.extend(row.iter().filter(|&j| j > i).map(|j| (i + shift, j + shift)));
            }
            for i in 0..shift {
                edges.extend((0..other.labels.len()).map(|j| (i, j + shift)));
            }
            return Ok(SimplicialComplex::flag(labels, edges));
        }
        let fa = self.maximal_faces(budget)?;
        let fb = other.maximal_faces(budget)?;
        let mut facets = Vec::new();
        for x in &fa {
            for y in &fb {
                facets.push(x.iter().copied().chain(y.iter().map(|&j| j + shift)).collect());
            }
        }
        Ok(SimplicialComplex::from_facets(labels, facets))
    }

    /// The set of faces written with vertex labels, for comparing complexes
    /// built on different vertex orders.
    pub fn labelled_faces(&self, budget: usize) -> Result<BTreeSet<BTreeSet<String>>, ComplexError> {
        Ok(self
            .faces(None, budget)?
            .into_iter()
            .flatten()
            .map(|f| f.iter().map(|&i| self.labels[i].clone()).collect())
            .collect())
    }

    /// Labels of a face.
    pub fn name_face(&self, face: &[usize]) -> Vec<String> {
        face.iter().map(|&i| self.labels[i].clone()).collect()
    }
}

fn bron_kerbosch(
    adj: &[BitSet],
    r: &mut Vec<usize>,
    p: BitSet,
    x: BitSet,
    out: &mut Vec<Vec<usize>>,
    budget: usize,
) -> Result<(), ComplexError> {
    if p.is_empty() {
        if x.is_empty() {
            if out.len() >= budget {
                return Err(ComplexError::FaceBudgetExceeded(budget));
            }
            out.push(r.clone());
        }
        return Ok(());
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (p.intersect(&adj[u]).iter().count(), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    let mut p = p;
    let mut x = x;
    let candidates: Vec<usize> = p.minus(&adj[pivot]).iter().collect();
    for v in candidates {
        r.push(v);
        bron_kerbosch(adj, r, p.intersect(&adj[v]), x.intersect(&adj[v]), out, budget)?;
        r.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}
