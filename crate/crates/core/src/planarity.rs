//! Planarity testing by path embedding (Demoucron, Malgrange and Pertuiset),
//! one biconnected block at a time. Quadratic, which is plenty for the
//! instance sizes this crate validates.

use std::collections::HashSet;

use crate::graph::Graph;

/// Whether the undirected graph `g` has a plane embedding.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return false;
    }
    biconnected_blocks(g)
        .into_iter()
        .all(|block| block.len() < 3 || block_is_planar(&block))
}

/// Edge sets of the biconnected blocks of `g`.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }

    fn visit(s: &mut State<'_>, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for i in 0..s.g.degree(u) {
            let w = s.g.neighbors(u)[i];
            if s.disc[w] == 0 {
                s.stack.push((u, w));
                visit(s, w, u);
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if w != parent && s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }

    let mut s = State {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..g.n() {
        if s.disc[v] == 0 {
            visit(&mut s, v, usize::MAX);
        }
    }
    s.blocks
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn block_is_planar(edges: &[(usize, usize)]) -> bool {
    // relabel the block's vertices to 0..k
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let k = verts.len();
    let local = |v: usize| verts.binary_search(&v).expect("block vertex");
    let mut adj = vec![Vec::new(); k];
    for &(u, v) in edges {
        let (a, b) = (local(u), local(v));
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    if k >= 3 && edges.len() > 3 * k - 6 {
        return false;
    }

    let cycle = find_cycle(&adj);
    let mut in_h = vec![false; k];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        h_edges.insert(key(v, cycle[(i + 1) % cycle.len()]));
    }
    let mut faces = vec![cycle.clone(), cycle];

    while h_edges.len() < edges.len() {
        let fragments = fragments(&adj, &in_h, &h_edges);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment while edges remain");
        let path = fragment_path(&adj, &in_h, &fragments[fi]);

        let face = &faces[face_idx];
        let len = face.len();
        let a = path[0];
        let b = *path.last().expect("path has two ends");
        let pa = face
            .iter()
            .position(|&x| x == a)
            .expect("attachment on face");
        let pb = face
            .iter()
            .position(|&x| x == b)
            .expect("attachment on face");
        let interior = &path[1..path.len() - 1];

        let mut first = Vec::new();
        let mut i = pa;
        loop {
            first.push(face[i]);
            if i == pb {
                break;
            }
            i = (i + 1) % len;
        }
        first.extend(interior.iter().rev());
        let mut second = Vec::new();
        let mut i = pb;
        loop {
            second.push(face[i]);
            if i == pa {
                break;
            }
            i = (i + 1) % len;
        }
        second.extend(interior.iter());

        faces[face_idx] = first;
        faces.push(second);
        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
    }
    true
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let k = adj.len();
    let mut parent = vec![usize::MAX; k];
    let mut state = vec![0u8; k];
    let mut stack = vec![(0usize, 0usize)];
    state[0] = 1;
    while let Some(&mut (u, ref mut next)) = stack.last_mut() {
        if *next < adj[u].len() {
            let w = adj[u][*next];
            *next += 1;
            if state[w] == 0 {
                state[w] = 1;
                parent[w] = u;
                stack.push((w, 0));
            } else if state[w] == 1 && w != parent[u] {
                let mut cycle = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
        } else {
            state[u] = 2;
            stack.pop();
        }
    }
    unreachable!("a biconnected block with three or more edges contains a cycle")
}

struct Fragment {
    attachments: Vec<usize>,
    /// Interior vertices; empty for a chord between two embedded vertices.
    interior: Vec<usize>,
    chord: Option<(usize, usize)>,
}

fn fragments(
    adj: &[Vec<usize>],
    in_h: &[bool],
    h_edges: &HashSet<(usize, usize)>,
) -> Vec<Fragment> {
    let k = adj.len();
    let mut out = Vec::new();
    for u in 0..k {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !h_edges.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: vec![u, v],
                    interior: Vec::new(),
                    chord: Some((u, v)),
                });
            }
        }
    }
    let mut seen = vec![false; k];
    for s in 0..k {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut attachments = Vec::new();
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in &adj[u] {
                if in_h[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment {
            attachments,
            interior: comp,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachments.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let a = frag.attachments[0];
    let b = frag.attachments[1];
    let k = adj.len();
    let inside: HashSet<usize> = frag.interior.iter().copied().collect();
    let mut prev = vec![usize::MAX; k];
    let mut queue = std::collections::VecDeque::new();
    for &w in &adj[a] {
        if !in_h[w] && inside.contains(&w) && prev[w] == usize::MAX {
            prev[w] = a;
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        if adj[u].contains(&b) {
            let mut path = vec![b, u];
            let mut x = u;
            while prev[x] != a {
                x = prev[x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in &adj[u] {
            if !in_h[w] && prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a biconnected block connects its attachments")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(r: usize, c: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..r {
            for j in 0..c {
                let v = i * c + j;
                if j + 1 < c {
                    e.push((v, v + 1));
                }
                if i + 1 < r {
                    e.push((v, v + c));
                }
            }
        }
        Graph::from_edges(r * c, e).unwrap()
    }

    fn wheel(spokes: usize) -> Graph {
        let mut e: Vec<(usize, usize)> = (1..=spokes).map(|i| (0, i)).collect();
        e.extend((1..=spokes).map(|i| (i, i % spokes + 1)));
        Graph::from_edges(spokes + 1, e).unwrap()
    }

    #[test]
    fn small_planar_graphs() {
        assert!(is_planar(&Graph::empty(4)));
        assert!(is_planar(&Graph::complete(4)));
        assert!(is_planar(&Graph::cycle(7)));
        assert!(is_planar(&grid(4, 5)));
        assert!(is_planar(&wheel(8)));
        assert!(is_planar(&Graph::complete_bipartite(2, 6)));
        // octahedron: K_{2,2,2}
        let oct = Graph::from_edges(
            6,
            (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|&(u, v)| v != u + 3),
        )
        .unwrap();
        assert_eq!(oct.m(), 12);
        assert!(is_planar(&oct));
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
        assert!(!is_planar(&Graph::petersen()));
        // K_{3,3} minus an edge is planar
        let k33 = Graph::complete_bipartite(3, 3);
        let e: Vec<_> = k33.edges().filter(|&e| e != (0, 3)).collect();
        assert!(is_planar(&Graph::from_edges(6, e).unwrap()));
    }

    #[test]
    fn subdivided_k33_is_not_planar() {
        // subdivide every edge of K_{3,3} once; Euler bound does not catch it
        let k33 = Graph::complete_bipartite(3, 3);
        let mut e = Vec::new();
        for (i, (u, v)) in k33.edges().enumerate() {
            e.push((u, 6 + i));
            e.push((6 + i, v));
        }
        let g = Graph::from_edges(15, e).unwrap();
        assert!(g.m() <= 3 * g.n() - 6);
        assert!(!is_planar(&g));
    }

    #[test]
    fn blocks_checked_independently() {
        // K5 glued to a triangle at one vertex
        let mut e: Vec<(usize, usize)> = Graph::complete(5).edges().collect();
        e.extend([(4, 5), (5, 6), (6, 4)]);
        assert!(!is_planar(&Graph::from_edges(7, e).unwrap()));
        // two K4s sharing a vertex
        let mut e: Vec<(usize, usize)> = Graph::complete(4).edges().collect();
        e.extend(Graph::complete(4).edges().map(|(u, v)| (u + 3, v + 3)));
        assert!(is_planar(&Graph::from_edges(7, e).unwrap()));
    }
}
