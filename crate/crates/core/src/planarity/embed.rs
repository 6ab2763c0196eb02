//! Path-addition planar embedding (Demoucron, Malgrange and Pertuiset).
//!
//! Each biconnected block is embedded separately, starting from a cycle and
//! repeatedly routing a path of some fragment through a face that contains
//! all of the fragment's attachment vertices. Faces are kept as oriented
//! vertex cycles, so every dart lies on exactly one face and the rotation
//! system can be read off at the end. Block rotations are concatenated at
//! cut vertices.

use crate::bitset::VertexSet;
use crate::graph::{Graph, MAX_VERTICES};

/// Rotation system for `g`, or `None` if `g` is not planar.
pub(super) fn embed(g: &Graph) -> Option<Vec<Vec<usize>>> {
    if !super::euler_bound_check(g) {
        return None;
    }
    let mut rotation = vec![Vec::new(); g.n()];
    for block in blocks(g) {
        if block.len() == 2 {
            let mut it = block.iter();
            let (u, v) = (it.next().unwrap(), it.next().unwrap());
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        for (v, rot) in embed_block(g, block)? {
            rotation[v].extend(rot);
        }
    }
    Some(rotation)
}

/// Vertex sets of the biconnected blocks (bridges included as 2-sets).
fn blocks(g: &Graph) -> Vec<VertexSet> {
    struct Dfs<'g> {
        g: &'g Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<VertexSet>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: usize) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for v in self.g.neighbors(u) {
                if self.disc[v] == 0 {
                    self.stack.push((u, v));
                    self.visit(v, u);
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut block = VertexSet::EMPTY;
                        while let Some((a, b)) = self.stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if v != parent && self.disc[v] < self.disc[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }

    let n = g.n();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for s in 0..n {
        if dfs.disc[s] == 0 {
            dfs.visit(s, usize::MAX);
        }
    }
    dfs.out
}

enum Fragment {
    Edge(usize, usize),
    Component { verts: VertexSet, attach: VertexSet },
}

impl Fragment {
    fn attachments(&self) -> VertexSet {
        match *self {
            Fragment::Edge(u, v) => VertexSet::singleton(u).union(VertexSet::singleton(v)),
            Fragment::Component { attach, .. } => attach,
        }
    }

    /// A path between two distinct attachments, interior inside the fragment.
    fn path(&self, adj: &[VertexSet]) -> Vec<usize> {
        match *self {
            Fragment::Edge(u, v) => vec![u, v],
            Fragment::Component { verts, attach } => {
                let a = attach.first().unwrap();
                let others = attach.difference(VertexSet::singleton(a));
                let mut parent = [usize::MAX; MAX_VERTICES];
                let mut queue: Vec<usize> = adj[a].intersection(verts).iter().collect();
                let mut seen: VertexSet = queue.iter().copied().collect();
                let mut head = 0;
                while head < queue.len() {
                    let x = queue[head];
                    head += 1;
                    if let Some(b) = adj[x].intersection(others).first() {
                        let mut path = vec![b, x];
                        let mut y = x;
                        while parent[y] != usize::MAX {
                            y = parent[y];
                            path.push(y);
                        }
                        path.push(a);
                        path.reverse();
                        return path;
                    }
                    for y in adj[x].intersection(verts).difference(seen) {
                        seen.insert(y);
                        parent[y] = x;
                        queue.push(y);
                    }
                }
                unreachable!("fragment of a biconnected block has two attachments")
            }
        }
    }
}

fn face_set(face: &[usize]) -> VertexSet {
    face.iter().copied().collect()
}

fn initial_cycle(adj: &[VertexSet], block: VertexSet) -> Vec<usize> {
    let u = block.first().unwrap();
    let v = adj[u].first().unwrap();
    // shortest v..u path avoiding the edge uv closes a cycle
    let mut parent = [usize::MAX; MAX_VERTICES];
    let mut queue = vec![v];
    let mut seen = VertexSet::singleton(v);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for y in adj[x].difference(seen) {
            if x == v && y == u {
                continue;
            }
            seen.insert(y);
            parent[y] = x;
            if y == u {
                let mut cycle = vec![u];
                let mut z = u;
                while z != v {
                    z = parent[z];
                    cycle.push(z);
                }
                return cycle;
            }
            queue.push(y);
        }
    }
    unreachable!("biconnected block with three or more vertices has a cycle")
}

fn embed_block(g: &Graph, block: VertexSet) -> Option<Vec<(usize, Vec<usize>)>> {
    let n = g.n();
    let adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).intersection(block)).collect();

    let cycle = initial_cycle(&adj, block);
    let mut embedded: VertexSet = cycle.iter().copied().collect();
    let mut h_adj = vec![VertexSet::EMPTY; n];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        h_adj[a].insert(b);
        h_adj[b].insert(a);
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.into_iter().rev().collect()];

    loop {
        let mut fragments = Vec::new();
        for u in embedded {
            for v in adj[u].intersection(embedded).difference(h_adj[u]) {
                if u < v {
                    fragments.push(Fragment::Edge(u, v));
                }
            }
        }
        let mut rest = block.difference(embedded);
        while let Some(s) = rest.first() {
            let verts = g.reach(s, rest);
            rest = rest.difference(verts);
            let attach = verts
                .iter()
                .fold(VertexSet::EMPTY, |acc, x| acc.union(adj[x]))
                .intersection(embedded);
            fragments.push(Fragment::Component { verts, attach });
        }
        if fragments.is_empty() {
            break;
        }

        let sets: Vec<VertexSet> = faces.iter().map(|f| face_set(f)).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let mut admissible = sets.iter().enumerate().filter(|(_, s)| att.is_subset(**s));
            let (first, _) = admissible.next()?;
            let only = admissible.next().is_none();
            if only {
                choice = Some((i, first));
                break;
            }
            if choice.is_none() {
                choice = Some((i, first));
            }
        }
        let (fi, face_idx) = choice.unwrap();
        let path = fragments[fi].path(&adj);
        for w in path.windows(2) {
            h_adj[w[0]].insert(w[1]);
            h_adj[w[1]].insert(w[0]);
        }
        embedded = embedded.union(path.iter().copied().collect());

        let face = std::mem::take(&mut faces[face_idx]);
        let (a, b) = (path[0], *path.last().unwrap());
        let start = face.iter().position(|&x| x == a).unwrap();
        let face: Vec<usize> = face[start..]
            .iter()
            .chain(&face[..start])
            .copied()
            .collect();
        let j = face.iter().position(|&x| x == b).unwrap();
        let interior = &path[1..path.len() - 1];

        let mut one: Vec<usize> = face[..=j].to_vec();
        one.extend(interior.iter().rev());
        let mut two: Vec<usize> = face[j..].to_vec();
        two.push(a);
        two.extend(interior);
        faces[face_idx] = one;
        faces.push(two);
    }

    // dart prev -> cur followed by cur -> next gives succ_cur(prev) = next
    let mut succ = vec![[usize::MAX; MAX_VERTICES]; n];
    for face in &faces {
        let m = face.len();
        for i in 0..m {
            let (prev, cur, next) = (face[(i + m - 1) % m], face[i], face[(i + 1) % m]);
            succ[cur][prev] = next;
        }
    }
    let mut out = Vec::with_capacity(block.len());
    for v in block {
        let start = adj[v].first().unwrap();
        let mut rot = vec![start];
        let mut x = succ[v][start];
        while x != start {
            rot.push(x);
            x = succ[v][x];
        }
        debug_assert_eq!(rot.len(), adj[v].len());
        out.push((v, rot));
    }
    Some(out)
}
