//! Tree construction, canonical forms, enumeration and the two-vertex
//! decomposition used by the branch exchange.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on constructed tree sizes.
pub const DEFAULT_MAX_VERTICES: usize = 100_000;

/// Orders up to this value are enumerated from all Prüfer sequences.
pub const PRUFER_MAX_N: usize = 8;

/// An unrooted simple tree on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TreeJson", into = "TreeJson")]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TreeJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<TreeJson> for Tree {
    type Error = Error;

    fn try_from(raw: TreeJson) -> Result<Tree> {
        Tree::new(raw.n, raw.edges.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

impl From<Tree> for TreeJson {
    fn from(t: Tree) -> TreeJson {
        TreeJson {
            n: t.n,
            edges: t.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl Tree {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Tree> {
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        if edges.len() != n - 1 {
            return Err(Error::EdgeCount {
                n,
                expected: n - 1,
                actual: edges.len(),
            });
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if adj[a].contains(&b) {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let t = Tree { n, edges, adj };
        if t.bfs_order(0).len() != n {
            return Err(Error::Disconnected);
        }
        Ok(t)
    }

    pub fn single_vertex() -> Tree {
        Tree {
            n: 1,
            edges: Vec::new(),
            adj: vec![Vec::new()],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn bfs_order(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Parent of every vertex when rooted at `root` (`usize::MAX` at the root).
    pub fn parents(&self, root: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.n];
        for v in self.bfs_order(root) {
            for &w in &self.adj[v] {
                if w != parent[v] {
                    parent[w] = v;
                }
            }
        }
        parent
    }

    /// Vertices on the unique `u`-`v` path, from `u` to `v`.
    pub fn path_between(&self, u: usize, v: usize) -> Vec<usize> {
        let parent = self.parents(u);
        let mut path = vec![v];
        let mut w = v;
        while w != u {
            w = parent[w];
            path.push(w);
        }
        path.reverse();
        path
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tree> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, tree has {} vertices",
                perm.len(),
                self.n
            )));
        }
        Tree::new(
            self.n,
            self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect(),
        )
    }

    /// Induced subtree on `vertices` (must be connected), relabelled in the
    /// given order. Returns the tree and the old-to-new index map.
    pub fn induced(&self, vertices: &[usize]) -> Result<(Tree, Vec<Option<usize>>)> {
        let mut map = vec![None; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            map[v] = Some(i);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b)| Some((map[a]?, map[b]?)))
            .collect();
        Ok((Tree::new(vertices.len(), edges)?, map))
    }

    /// Vertices of the component containing `start` after deleting `removed`.
    pub fn component_without(&self, start: usize, removed: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[removed] = true;
        seen[start] = true;
        let mut out = vec![start];
        let mut i = 0;
        while i < out.len() {
            let v = out[i];
            i += 1;
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serialization cannot fail")
    }

    pub fn from_json(s: &str) -> std::result::Result<Tree, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// A tree with a distinguished root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
}

/// Parent/children layout of a rooted tree, children listed in BFS order.
#[derive(Clone, Debug)]
pub struct RootedLayout {
    pub order: Vec<usize>,
    pub parent: Vec<usize>,
    pub children: Vec<Vec<usize>>,
}

impl RootedTree {
    pub fn new(tree: Tree, root: usize) -> Result<RootedTree> {
        tree.check_vertex(root)?;
        Ok(RootedTree { tree, root })
    }

    pub fn single_vertex() -> RootedTree {
        RootedTree {
            tree: Tree::single_vertex(),
            root: 0,
        }
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn into_tree(self) -> Tree {
        self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn order(&self) -> usize {
        self.tree.n
    }

    pub fn layout(&self) -> RootedLayout {
        let order = self.tree.bfs_order(self.root);
        let parent = self.tree.parents(self.root);
        let mut children = vec![Vec::new(); self.tree.n];
        for &v in &order[1..] {
            children[parent[v]].push(v);
        }
        RootedLayout {
            order,
            parent,
            children,
        }
    }

    /// The subtrees hanging from the root, each rooted at the root's neighbour.
    pub fn branches(&self) -> Vec<RootedTree> {
        self.tree
            .neighbors(self.root)
            .iter()
            .map(|&c| {
                let comp = self.tree.component_without(c, self.root);
                let (t, _) = self.tree.induced(&comp).expect("component is a tree");
                RootedTree { tree: t, root: 0 }
            })
            .collect()
    }

    /// Rooted subtree induced by `v` and its descendants.
    pub fn subtree_at(&self, v: usize) -> Result<RootedTree> {
        self.tree.check_vertex(v)?;
        if v == self.root {
            return Ok(self.clone());
        }
        let parent = self.tree.parents(self.root);
        let comp = self.tree.component_without(v, parent[v]);
        let (t, _) = self.tree.induced(&comp)?;
        Ok(RootedTree { tree: t, root: 0 })
    }

    /// A planted tree is one whose root is a leaf; this returns the part
    /// below the root, rooted at the root's only neighbour.
    pub fn unplant(&self) -> Result<RootedTree> {
        let nbrs = self.tree.neighbors(self.root);
        if nbrs.len() != 1 {
            return Err(Error::BadDecomposition(format!(
                "branch root has degree {}, expected 1",
                nbrs.len()
            )));
        }
        let comp = self.tree.component_without(nbrs[0], self.root);
        let (t, _) = self.tree.induced(&comp)?;
        Ok(RootedTree { tree: t, root: 0 })
    }

    /// Inverse of [`RootedTree::unplant`]: add a new leaf root above this root.
    pub fn plant(&self) -> RootedTree {
        let n = self.tree.n;
        let mut edges = self.tree.edges.clone();
        edges.push((n, self.root));
        let tree = Tree::new(n + 1, edges).expect("planting keeps a tree");
        RootedTree { tree, root: n }
    }

    /// Code of the rooted tree; equal codes iff isomorphic as rooted trees.
    pub fn canonical_code(&self) -> CanonicalCode {
        CanonicalCode(rooted_code(&self.tree, self.root))
    }
}

/// AHU encoding of a tree: `(` children-in-sorted-order `)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

fn rooted_code(t: &Tree, root: usize) -> Vec<u8> {
    let order = t.bfs_order(root);
    let parent = t.parents(root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); t.n];
    let mut child_codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); t.n];
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut child_codes[v]);
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(b')');
        if v == root {
            codes[v] = code;
        } else {
            child_codes[parent[v]].push(code);
        }
    }
    std::mem::take(&mut codes[root])
}

/// The one or two central vertices, found by peeling leaves.
pub fn centers(t: &Tree) -> Vec<usize> {
    if t.n <= 2 {
        return (0..t.n).collect();
    }
    let mut deg: Vec<usize> = (0..t.n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..t.n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = t.n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Isomorphism-invariant code of a free tree.
pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let code = centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .expect("a tree has a center");
    CanonicalCode(code)
}

/// Relabel a tree so isomorphic inputs give identical outputs: the chosen
/// center becomes 0 and the rest follow a preorder over sorted subtree codes.
pub fn canonical_form(t: &Tree) -> Tree {
    let root = centers(t)
        .into_iter()
        .min_by_key(|&c| rooted_code(t, c))
        .expect("a tree has a center");
    let parent = t.parents(root);
    let order = t.bfs_order(root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); t.n];
    for &v in order.iter().rev() {
        let mut kids: Vec<&Vec<u8>> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent[v])
            .map(|&w| &codes[w])
            .collect();
        kids.sort_unstable();
        let mut code = vec![b'('];
        for k in kids {
            code.extend_from_slice(k);
        }
        code.push(b')');
        codes[v] = code;
    }
    let mut perm = vec![0; t.n];
    let mut next = 0;
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        perm[v] = next;
        next += 1;
        let mut kids: Vec<usize> = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| w != parent[v])
            .collect();
        kids.sort_by(|&a, &b| codes[a].cmp(&codes[b]));
        // Reverse so the smallest code is visited first.
        stack.extend(kids.into_iter().rev());
    }
    let mut edges: Vec<(usize, usize)> = t
        .edges
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (perm[a], perm[b]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    Tree::new(t.n, edges).expect("relabelling keeps a tree")
}

pub fn make_path(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    Tree::new(n, (1..n).map(|i| (i - 1, i)).collect())
}

pub fn make_star(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    Tree::new(n, (1..n).map(|i| (0, i)).collect())
}

/// Number of vertices of `C_h` for branching `d`.
pub fn complete_d_ary_order(d: usize, h: usize) -> Option<u128> {
    let (d, h) = (d as u128, u32::try_from(h).ok()?);
    if d == 1 {
        return Some(h as u128);
    }
    Some((d.checked_pow(h)? - 1) / (d - 1))
}

/// Complete `d`-ary tree `C_h`: every leaf at depth `h - 1`; `C_1` is a
/// single vertex. Root is vertex 0, vertices numbered in BFS order.
pub fn make_complete_d_ary(d: usize, h: usize) -> Result<RootedTree> {
    make_complete_d_ary_limited(d, h, DEFAULT_MAX_VERTICES)
}

pub fn make_complete_d_ary_limited(d: usize, h: usize, max_vertices: usize) -> Result<RootedTree> {
    if d == 0 || h == 0 {
        return Err(Error::InvalidParameter(format!(
            "complete d-ary tree needs d >= 1 and h >= 1 (got d={d}, h={h})"
        )));
    }
    let size = complete_d_ary_order(d, h).unwrap_or(u128::MAX);
    if size > max_vertices as u128 {
        return Err(Error::TooLarge {
            requested: size,
            limit: max_vertices,
        });
    }
    let n = size as usize;
    // In BFS numbering the children of vertex i are d*i+1 ..= d*i+d.
    let edges = (1..n).map(|v| ((v - 1) / d, v)).collect();
    RootedTree::new(Tree::new(n, edges)?, 0)
}

/// Greedy tree with maximum degree `dplus1`: root gets `dplus1` children,
/// every later vertex gets `dplus1 - 1`, filled breadth first.
pub fn make_greedy(n: usize, dplus1: usize) -> Result<Tree> {
    Ok(make_greedy_rooted(n, dplus1)?.into_tree())
}

pub fn make_greedy_rooted(n: usize, dplus1: usize) -> Result<RootedTree> {
    if dplus1 < 2 {
        return Err(Error::InvalidParameter(format!(
            "greedy tree needs max degree >= 2, got {dplus1}"
        )));
    }
    if n < dplus1 + 1 {
        return Err(Error::InvalidParameter(format!(
            "greedy tree with max degree {dplus1} needs at least {} vertices, got {n}",
            dplus1 + 1
        )));
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    let mut parent = 0;
    while next < n {
        let quota = if parent == 0 { dplus1 } else { dplus1 - 1 };
        for _ in 0..quota {
            if next == n {
                break;
            }
            edges.push((parent, next));
            next += 1;
        }
        parent += 1;
    }
    RootedTree::new(Tree::new(n, edges)?, 0)
}

/// Which of the three greedy-tree conditions a rooted tree violates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GreedyCheck {
    pub root_degree_ok: bool,
    pub leaf_heights_ok: bool,
    pub incomplete_children_ok: bool,
}

impl GreedyCheck {
    pub fn all(&self) -> bool {
        self.root_degree_ok && self.leaf_heights_ok && self.incomplete_children_ok
    }
}

/// Check the greedy-tree conditions for maximum degree `dplus1`:
/// root degree `dplus1`, pendant heights within one of each other, and at
/// most one child subtree per vertex that is not a complete `d`-ary tree.
pub fn check_greedy(t: &RootedTree, dplus1: usize) -> GreedyCheck {
    let tree = t.tree();
    let d = dplus1.saturating_sub(1);
    let layout = t.layout();
    let root_degree_ok = tree.degree(t.root()) == dplus1 && tree.max_degree() == dplus1;

    let mut depth = vec![0usize; tree.order()];
    for &v in &layout.order[1..] {
        depth[v] = depth[layout.parent[v]] + 1;
    }
    let leaf_depths: Vec<usize> = layout
        .order
        .iter()
        .filter(|&&v| v != t.root() && layout.children[v].is_empty())
        .map(|&v| depth[v])
        .collect();
    let leaf_heights_ok = match (leaf_depths.iter().min(), leaf_depths.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo <= 1,
        _ => true,
    };

    // complete[v]: Some(height) when the subtree at v is a complete d-ary tree.
    let mut complete: Vec<Option<usize>> = vec![None; tree.order()];
    for &v in layout.order.iter().rev() {
        let kids = &layout.children[v];
        complete[v] = if kids.is_empty() {
            Some(1)
        } else if kids.len() == d {
            let first = complete[kids[0]];
            if first.is_some() && kids.iter().all(|&c| complete[c] == first) {
                first.map(|h| h + 1)
            } else {
                None
            }
        } else {
            None
        };
    }
    let incomplete_children_ok = layout.order.iter().all(|&v| {
        layout.children[v]
            .iter()
            .filter(|&&c| complete[c].is_none())
            .count()
            <= 1
    });
    GreedyCheck {
        root_degree_ok,
        leaf_heights_ok,
        incomplete_children_ok,
    }
}

/// Broom: a path on `n - d` vertices with `d` extra leaves at vertex 0, so
/// vertex 0 has degree `dplus1`.
pub fn make_broom(n: usize, dplus1: usize) -> Result<Tree> {
    if dplus1 < 1 || n < dplus1 + 1 {
        return Err(Error::InvalidParameter(format!(
            "broom with max degree {dplus1} needs at least {} vertices, got {n}",
            dplus1 + 1
        )));
    }
    let d = dplus1 - 1;
    let path_len = n - d;
    let mut edges: Vec<(usize, usize)> = (1..path_len).map(|i| (i - 1, i)).collect();
    edges.extend((path_len..n).map(|leaf| (0, leaf)));
    Tree::new(n, edges)
}

/// Insert a new vertex into every edge. Original vertices keep their labels;
/// edge `i` becomes vertex `n + i`.
pub fn subdivide(t: &Tree) -> Tree {
    let n = t.n;
    let mut edges = Vec::with_capacity(2 * t.edges.len());
    for (i, &(a, b)) in t.edges.iter().enumerate() {
        edges.push((a, n + i));
        edges.push((n + i, b));
    }
    Tree::new(2 * n - 1, edges).expect("subdivision of a tree is a tree")
}

pub fn subdivide_rooted(t: &RootedTree) -> RootedTree {
    RootedTree {
        tree: subdivide(&t.tree),
        root: t.root,
    }
}

/// Decode a Prüfer sequence into a labeled tree on `seq.len() + 2` vertices.
pub fn from_prufer(seq: &[usize]) -> Result<Tree> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        if s >= n {
            return Err(Error::VertexOutOfRange { vertex: s, n });
        }
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &s in seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("Prüfer decoding always has a leaf");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Tree::new(n, edges)
}

fn degree_ok(max_degree: usize, max_deg: usize, exact: bool) -> bool {
    if exact {
        max_degree == max_deg
    } else {
        max_degree <= max_deg
    }
}

/// One representative per isomorphism class, from all `n^(n-2)` Prüfer
/// sequences. Exponential; intended for small `n` and as a cross-check.
pub fn enumerate_prufer(n: usize, max_deg: usize, exact: bool) -> Vec<Tree> {
    if n <= 2 {
        return enumerate_small(n, max_deg, exact);
    }
    let mut classes: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut counts = vec![0usize; n];
    counts[0] = len;
    loop {
        // Vertex degree is its multiplicity in the sequence plus one.
        let max_degree = counts.iter().max().copied().unwrap_or(0) + 1;
        if degree_ok(max_degree, max_deg, exact) {
            let t = from_prufer(&seq).expect("valid Prüfer sequence");
            classes.entry(canonical_code(&t)).or_insert_with(|| canonical_form(&t));
        }
        // Odometer increment.
        let mut i = len;
        loop {
            if i == 0 {
                return classes.into_values().collect();
            }
            i -= 1;
            counts[seq[i]] -= 1;
            seq[i] += 1;
            if seq[i] < n {
                counts[seq[i]] += 1;
                break;
            }
            seq[i] = 0;
            counts[0] += 1;
        }
    }
}

fn enumerate_small(n: usize, max_deg: usize, exact: bool) -> Vec<Tree> {
    match n {
        0 => Vec::new(),
        // The single vertex is kept for every degree bound.
        1 => vec![Tree::single_vertex()],
        _ if degree_ok(1, max_deg, exact) => vec![make_path(2).expect("P_2")],
        _ => Vec::new(),
    }
}

/// One representative per isomorphism class, grown by attaching a leaf to
/// every admissible vertex of every class on one vertex fewer.
pub fn enumerate_by_extension(n: usize, max_deg: usize, exact: bool) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
    let single = Tree::single_vertex();
    level.insert(canonical_code(&single), single);
    for m in 1..n {
        let mut next: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
        for t in level.values() {
            for v in 0..m {
                if t.degree(v) >= max_deg {
                    continue;
                }
                let mut edges = t.edges.clone();
                edges.push((v, m));
                let grown = Tree::new(m + 1, edges).expect("adding a leaf keeps a tree");
                next.entry(canonical_code(&grown))
                    .or_insert_with(|| canonical_form(&grown));
            }
        }
        level = next;
    }
    level
        .into_values()
        .filter(|t| {
            // A single vertex has maximum degree 0; it is the only tree of
            // order 1 and is kept for every bound.
            n == 1 || degree_ok(t.max_degree(), max_deg, exact)
        })
        .collect()
}

/// All free trees of order `n` with maximum degree `max_deg` (`exact`) or at
/// most `max_deg`, one canonical representative per class, sorted by code.
pub fn enumerate_trees(n: usize, max_deg: usize, exact: bool) -> Vec<Tree> {
    if n <= PRUFER_MAX_N {
        enumerate_prufer(n, max_deg, exact)
    } else {
        enumerate_by_extension(n, max_deg, exact)
    }
}

/// A tree `t0` with marked vertices `u`, `v`, plus planted branches to hang
/// at each: every branch's root is a leaf that gets identified with `u`
/// (left) or `v` (right).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub t0: Tree,
    pub u: usize,
    pub v: usize,
    pub left: Vec<RootedTree>,
    pub right: Vec<RootedTree>,
}

impl Decomposition {
    pub fn new(
        t0: Tree,
        u: usize,
        v: usize,
        left: Vec<RootedTree>,
        right: Vec<RootedTree>,
    ) -> Result<Decomposition> {
        t0.check_vertex(u)?;
        t0.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        for b in left.iter().chain(&right) {
            if b.order() < 2 || b.tree().degree(b.root()) != 1 {
                return Err(Error::BadDecomposition(
                    "every branch must be planted (root of degree 1)".into(),
                ));
            }
        }
        Ok(Decomposition {
            t0,
            u,
            v,
            left,
            right,
        })
    }

    pub fn composed_order(&self) -> usize {
        self.t0.order()
            + self
                .left
                .iter()
                .chain(&self.right)
                .map(|b| b.order() - 1)
                .sum::<usize>()
    }

    /// Same decomposition with the roles of `u` and `v` exchanged.
    pub fn swapped(&self) -> Decomposition {
        Decomposition {
            t0: self.t0.clone(),
            u: self.v,
            v: self.u,
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }
}

/// Split `t` at `u` and `v`: the branches at `u` away from `v`, the branches
/// at `v` away from `u`, and everything else as `t0`.
pub fn decompose(t: &Tree, u: usize, v: usize) -> Result<Decomposition> {
    t.check_vertex(u)?;
    t.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let path = t.path_between(u, v);
    let toward_v = path[1];
    let toward_u = path[path.len() - 2];
    let mut in_branch = vec![false; t.order()];

    let planted = |center: usize, avoid: usize, in_branch: &mut Vec<bool>| {
        t.neighbors(center)
            .iter()
            .filter(|&&w| w != avoid)
            .map(|&w| {
                let comp = t.component_without(w, center);
                for &c in &comp {
                    in_branch[c] = true;
                }
                let mut verts = Vec::with_capacity(comp.len() + 1);
                verts.push(center);
                verts.extend(comp);
                let (bt, _) = t.induced(&verts).expect("branch is connected");
                RootedTree::new(bt, 0).expect("root 0 exists")
            })
            .collect::<Vec<_>>()
    };
    let left = planted(u, toward_v, &mut in_branch);
    let right = planted(v, toward_u, &mut in_branch);

    let core: Vec<usize> = (0..t.order()).filter(|&w| !in_branch[w]).collect();
    let (t0, map) = t.induced(&core)?;
    let (nu, nv) = (map[u].expect("u in core"), map[v].expect("v in core"));
    Decomposition::new(t0, nu, nv, left, right)
}

/// Glue the branches back onto `t0`. Vertices of `t0` keep their labels;
/// branch vertices follow in order.
pub fn compose(dec: &Decomposition) -> Tree {
    let mut edges = dec.t0.edges.clone();
    let mut next = dec.t0.order();
    let attach = |branches: &[RootedTree], at: usize, edges: &mut Vec<_>, next: &mut usize| {
        for b in branches {
            let mut map = vec![usize::MAX; b.order()];
            for (w, slot) in map.iter_mut().enumerate() {
                if w == b.root() {
                    *slot = at;
                } else {
                    *slot = *next;
                    *next += 1;
                }
            }
            edges.extend(b.tree().edges().iter().map(|&(x, y)| (map[x], map[y])));
        }
    };
    attach(&dec.left, dec.u, &mut edges, &mut next);
    attach(&dec.right, dec.v, &mut edges, &mut next);
    Tree::new(next, edges).expect("composition of trees along single vertices is a tree")
}
