//! Brute-force oracles shared by the integration tests. None of them call
//! the library routine they are used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use chromsym::graph::Graph;
use chromsym::partition::Partition;

/// Connected-partition types of `g`, from every set partition of `V`.
pub fn connected_types_by_set_partitions(g: &Graph) -> BTreeSet<Partition> {
    let n = g.n();
    let mut types = BTreeSet::new();
    let mut block_of = vec![0usize; n];
    fn rec(g: &Graph, v: usize, blocks: usize, block_of: &mut Vec<usize>, types: &mut BTreeSet<Partition>) {
        let n = g.n();
        if v == n {
            let mut masks = vec![0u64; blocks];
            for (u, &b) in block_of.iter().enumerate() {
                masks[b] |= 1 << u;
            }
            if masks.iter().all(|&m| g.is_connected_within(m)) {
                types.insert(Partition::from_sizes(masks.iter().map(|m| m.count_ones() as usize)));
            }
            return;
        }
        for b in 0..=blocks {
            block_of[v] = b;
            rec(g, v + 1, blocks.max(b + 1), block_of, types);
        }
    }
    if n > 0 {
        rec(g, 0, 0, &mut block_of, &mut types);
    }
    types
}

/// Decodes a Prüfer sequence over `0..n`.
pub fn prufer_tree(seq: &[usize], n: usize) -> Graph {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    if n >= 2 {
        edges.push((rest[0], rest[1]));
    }
    Graph::from_edges(n, edges).unwrap()
}

/// AHU parenthesis string of the tree rooted at its centre(s), found by
/// repeatedly stripping leaves; the smaller string when there are two.
pub fn ahu_canonical(g: &Graph) -> String {
    let n = g.n();
    if n == 1 {
        return "()".into();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut removed = vec![false; n];
    while alive > 2 {
        let mut next = Vec::new();
        for &leaf in &layer {
            removed[leaf] = true;
            alive -= 1;
            for w in g.neighbors(leaf) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let centres: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    fn enc(g: &Graph, v: usize, parent: Option<usize>) -> String {
        let mut kids: Vec<String> = g.neighbors(v).filter(|&w| Some(w) != parent).map(|w| enc(g, w, Some(v))).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    centres.iter().map(|&c| enc(g, c, None)).min().unwrap()
}

/// Isomorphism classes of trees on `n` vertices, via all `n^(n−2)` Prüfer
/// sequences.
pub fn tree_classes_by_prufer(n: usize) -> HashSet<String> {
    let mut out = HashSet::new();
    if n == 1 {
        out.insert("()".to_string());
        return out;
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        out.insert(ahu_canonical(&prufer_tree(&seq, n)));
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// Semistandard tableaux of `shape` with content `content`, counted cell by
/// cell in row-reading order.
pub fn kostka_brute(shape: &[usize], content: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut left = content.to_vec();
    fn rec(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 0..left.len() {
            if left[v] == 0 || (c > 0 && grid[r][c - 1] > v) || (r > 0 && grid[r - 1][c] >= v) {
                continue;
            }
            grid[r][c] = v;
            left[v] -= 1;
            total += rec(k + 1, cells, grid, left);
            left[v] += 1;
        }
        total
    }
    rec(0, &cells, &mut grid, &mut left)
}

/// 0-1 matrices with row sums `rows` and column sums `cols`.
pub fn zero_one_matrices(rows: &[usize], cols: &[usize]) -> u64 {
    fn rec(i: usize, rows: &[usize], left: &mut Vec<usize>) -> u64 {
        if i == rows.len() {
            return u64::from(left.iter().all(|&c| c == 0));
        }
        let k = left.len();
        let mut total = 0;
        for mask in 0u32..1 << k {
            if mask.count_ones() as usize != rows[i] || (0..k).any(|j| mask >> j & 1 == 1 && left[j] == 0) {
                continue;
            }
            (0..k).filter(|&j| mask >> j & 1 == 1).for_each(|j| left[j] -= 1);
            total += rec(i + 1, rows, left);
            (0..k).filter(|&j| mask >> j & 1 == 1).for_each(|j| left[j] += 1);
        }
        total
    }
    rec(0, rows, &mut cols.to_vec())
}

/// A deterministic pseudo-random connected graph: a random spanning tree plus
/// extra edges.
pub fn random_connected_graph(n: usize, extra: usize, mut seed: u64) -> Graph {
    let mut next = move || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        seed
    };
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push(((next() % v as u64) as usize, v));
    }
    for _ in 0..extra {
        let (u, v) = ((next() % n as u64) as usize, (next() % n as u64) as usize);
        let e = (u.min(v), u.max(v));
        if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
            edges.push(e);
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
