//! Components, blocks, cut structure, and bipartiteness.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Connected components, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = 0u64;
    let mut out = Vec::new();
    for start in 0..n {
        if seen & (1 << start) != 0 {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        seen |= 1 << start;
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if seen & (1 << w) == 0 {
                    seen |= 1 << w;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices), the
/// cut vertices, and the bipartite incidence between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets, each sorted; blocks ordered lexicographically. Isolated
    /// vertices appear as singleton blocks.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    /// `(block index, cut vertex)` incidence pairs, sorted.
    pub block_tree: Vec<(usize, usize)>,
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut state = BlockDfs {
        g,
        depth: vec![usize::MAX; n],
        low: vec![0; n],
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; n],
    };
    for root in 0..n {
        if state.depth[root] == usize::MAX {
            state.run(root);
            if g.degree(root) == 0 {
                state.blocks.push(vec![root]);
            }
        }
    }
    let BlockDfs { mut blocks, is_cut, .. } = state;
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    let mut block_tree = Vec::new();
    for (bi, b) in blocks.iter().enumerate() {
        for &v in b {
            if is_cut[v] {
                block_tree.push((bi, v));
            }
        }
    }
    block_tree.sort_unstable();
    BlockDecomposition { blocks, cut_vertices, block_tree }
}

struct BlockDfs<'a> {
    g: &'a Graph,
    depth: Vec<usize>,
    low: Vec<usize>,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
}

impl BlockDfs<'_> {
    /// Iterative lowpoint DFS; pops a block's edges when a child cannot
    /// reach above its parent.
    fn run(&mut self, root: usize) {
        // frame: (vertex, parent, unprocessed neighbor mask)
        let mut frames: Vec<(usize, usize, u64)> =
            vec![(root, usize::MAX, self.g.neighbor_mask(root))];
        self.depth[root] = 0;
        self.low[root] = 0;
        let mut root_children = 0;
        while let Some(frame) = frames.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if frame.2 != 0 {
                let w = frame.2.trailing_zeros() as usize;
                frame.2 &= frame.2 - 1;
                if w == parent {
                    continue;
                }
                if self.depth[w] == usize::MAX {
                    self.depth[w] = self.depth[v] + 1;
                    self.low[w] = self.depth[w];
                    self.edge_stack.push((v, w));
                    frames.push((w, v, self.g.neighbor_mask(w)));
                } else if self.depth[w] < self.depth[v] {
                    self.edge_stack.push((v, w));
                    self.low[v] = self.low[v].min(self.depth[w]);
                }
            } else {
                frames.pop();
                let Some(pframe) = frames.last() else { break };
                let p = pframe.0;
                self.low[p] = self.low[p].min(self.low[v]);
                if p == root {
                    root_children += 1;
                }
                if self.low[v] >= self.depth[p] {
                    let mut verts = 0u64;
                    loop {
                        let (a, b) = self.edge_stack.pop().expect("tree edge on stack");
                        verts |= (1 << a) | (1 << b);
                        if (a, b) == (p, v) {
                            break;
                        }
                    }
                    let members: Vec<usize> =
                        (0..self.g.n()).filter(|&u| verts & (1 << u) != 0).collect();
                    self.blocks.push(members);
                    if p != root {
                        self.is_cut[p] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            self.is_cut[root] = true;
        }
    }
}

/// Answer to "is the vertex connectivity at most k?".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectivityBound {
    /// Deleting this set (possibly empty, for disconnected graphs)
    /// disconnects the graph.
    SeparatorFound(Vec<usize>),
    /// Complete graph with n - 1 ≤ k: connectivity is within the bound but
    /// no separating set exists.
    CompleteWithinBound,
    /// Connectivity exceeds k.
    Exceeds,
}

/// Checks κ(g) ≤ k by brute force over deletion sets, k ≤ 3. Returns the
/// lexicographically first separator of minimum size.
pub fn vertex_connectivity_at_most(g: &Graph, k: usize) -> Result<ConnectivityBound> {
    if k > 3 {
        return Err(Error::Unsupported(format!("connectivity bound k = {k}, max 3")));
    }
    let n = g.n();
    for size in 0..=k.min(n.saturating_sub(1)) {
        for subset in (0..n).combinations(size) {
            let keep: Vec<usize> = (0..n).filter(|v| !subset.contains(v)).collect();
            if keep.len() >= 2 && !is_connected(&g.induced_subgraph(&keep)?) {
                return Ok(ConnectivityBound::SeparatorFound(subset));
            }
        }
    }
    if n > 0 && n <= k + 1 && g.edge_count() == n * (n - 1) / 2 {
        return Ok(ConnectivityBound::CompleteWithinBound);
    }
    Ok(ConnectivityBound::Exceeds)
}

pub fn is_two_connected(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || !is_connected(g) {
        return false;
    }
    block_decomposition(g).cut_vertices.is_empty()
}

/// All 2-cuts of a 2-connected graph, lexicographically sorted.
pub fn find_two_cuts(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let n = g.n();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let keep: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
            if keep.len() >= 2 && !is_connected(&g.induced_subgraph(&keep)?) {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BipartiteVerdict {
    /// A two-coloring, as the sorted vertex sets of the two sides.
    Bipartite { sides: (Vec<usize>, Vec<usize>) },
    /// An odd cycle, found from the first BFS layer conflict under fixed
    /// vertex order.
    OddCycleFound(Vec<usize>),
}

pub fn is_bipartite(g: &Graph) -> BipartiteVerdict {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = color[v] ^ 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return BipartiteVerdict::OddCycleFound(odd_cycle(&parent, v, w));
                }
            }
        }
    }
    let side = |c: u8| (0..n).filter(|&v| color[v] == c).collect();
    BipartiteVerdict::Bipartite { sides: (side(0), side(1)) }
}

/// Joins the two BFS-tree paths at their lowest common ancestor; same-color
/// endpoints make the resulting cycle odd.
fn odd_cycle(parent: &[usize], v: usize, w: usize) -> Vec<usize> {
    let ancestors = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pv = ancestors(v);
    let pw = ancestors(w);
    let mut i = pv.len();
    let mut j = pw.len();
    while i > 0 && j > 0 && pv[i - 1] == pw[j - 1] {
        i -= 1;
        j -= 1;
    }
    // pv[..=i] runs v down to the lca, pw[..j] runs w up from below it
    let mut cycle = pv[..=i].to_vec();
    cycle.extend(pw[..j].iter().rev());
    cycle
}
