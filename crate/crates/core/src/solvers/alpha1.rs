use super::SolveResult;
use crate::graph::{bits, EdgeSet, Graph, MAX_VERTICES};

/// Include/exclude search over edges in id order. Including `uv` bans `uw` and
/// `vw` for every common neighbour `w`; a branch is cut when the chosen edges
/// plus the unbanned undecided ones cannot beat the incumbent.
struct Search<'a> {
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    /// Position of edge `uv` in `edges`, indexed by `u * n + v`.
    pos: Vec<usize>,
    /// How many chosen edges ban each edge.
    bans: Vec<u32>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    /// Applies (or, with `delta = -1`, undoes) the bans caused by edge `i`.
    /// Returns how many edges after `i` changed between banned and unbanned.
    fn ban(&mut self, i: usize, delta: i32) -> usize {
        let (u, v) = self.edges[i];
        let n = self.g.n();
        let mut changed = 0;
        for w in bits(self.g.row(u) & self.g.row(v)) {
            for x in [u, v] {
                let j = self.pos[x * n + w];
                let before = self.bans[j];
                self.bans[j] = (before as i32 + delta) as u32;
                if j > i && (before == 0) != (self.bans[j] == 0) {
                    changed += 1;
                }
            }
        }
        changed
    }

    fn run(&mut self, mut i: usize, remaining: usize) {
        self.nodes += 1;
        if self.chosen.len() + remaining <= self.best.len() {
            return;
        }
        while i < self.edges.len() && self.bans[i] > 0 {
            i += 1;
        }
        if i == self.edges.len() {
            self.best.clone_from(&self.chosen);
            return;
        }
        let newly_banned = self.ban(i, 1);
        self.chosen.push(i);
        self.run(i + 1, remaining - 1 - newly_banned);
        self.chosen.pop();
        self.ban(i, -1);
        self.run(i + 1, remaining - 1);
    }
}

/// Maximum triangle-independent edge set.
pub fn alpha1(g: &Graph) -> SolveResult<EdgeSet> {
    let n = g.n();
    let edges = g.edges();
    let mut pos = vec![usize::MAX; n * n];
    for (k, &(u, v)) in edges.iter().enumerate() {
        pos[u * n + v] = k;
        pos[v * n + u] = k;
    }
    let mut search = Search {
        g,
        bans: vec![0; edges.len()],
        edges,
        pos,
        chosen: Vec::with_capacity(MAX_VERTICES * MAX_VERTICES / 4),
        best: Vec::new(),
        nodes: 0,
    };
    let m = search.edges.len();
    search.run(0, m);
    let witness = EdgeSet::from_pairs(g, search.best.iter().map(|&k| search.edges[k]))
        .expect("witness edges come from the host graph");
    SolveResult::exact(search.best.len(), witness, search.nodes)
}
