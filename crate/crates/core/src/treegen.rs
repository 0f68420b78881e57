//! Free trees up to isomorphism.
//!
//! Generation walks the centre-rooted level sequences of Wright, Richmond,
//! Odlyzko and McKay in constant amortized time per tree. Each generated tree
//! is re-encoded as a [`TreeCode`]: the level sequence of the tree rooted at
//! its centroid with subtrees in decreasing order, taking the larger of the
//! two rootings when there are two centroids. Equal codes mean isomorphic
//! trees.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` accepted by [`free_trees`].
pub const DEFAULT_MAX_TREE_VERTICES: usize = 19;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeCode {
    levels: Vec<u8>,
}

impl TreeCode {
    pub fn from_graph(g: &Graph) -> Result<Self> {
        if !g.is_tree() {
            return Err(Error::InvalidGraph("a tree code needs a tree".into()));
        }
        let n = g.n();
        let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
        let levels = centroids(&adj)
            .into_iter()
            .map(|c| {
                let mut out = Vec::with_capacity(n);
                rooted_code(&adj, c, usize::MAX, 0, &mut out);
                out
            })
            .max()
            .expect("a tree has a centroid");
        Ok(TreeCode { levels })
    }

    pub fn n(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[u8] {
        &self.levels
    }

    /// Vertex `i` is the `i`-th entry of the level sequence; vertex 0 is a
    /// centroid.
    pub fn to_graph(&self) -> Graph {
        let levels: Vec<usize> = self.levels.iter().map(|&l| l as usize).collect();
        Graph::from_edges(self.n(), layout_edges(&levels)).expect("level sequences decode to trees")
    }

    pub fn degrees(&self) -> Vec<usize> {
        let levels: Vec<usize> = self.levels.iter().map(|&l| l as usize).collect();
        layout_degrees(&levels)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }
}

fn centroids(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let heaviest = |v: usize| {
        let below = adj[v].iter().filter(|&&w| parent[w] == v).map(|&w| size[w]).max().unwrap_or(0);
        below.max(n - size[v])
    };
    let best = (0..n).map(heaviest).min().unwrap_or(0);
    (0..n).filter(|&v| heaviest(v) == best).collect()
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize, depth: u8, out: &mut Vec<u8>) {
    let mut subtrees: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| {
            let mut s = Vec::new();
            rooted_code(adj, w, v, depth + 1, &mut s);
            s
        })
        .collect();
    subtrees.sort_unstable_by(|a, b| b.cmp(a));
    out.push(depth);
    for s in subtrees {
        out.extend(s);
    }
}

impl fmt::Display for TreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.levels.iter().map(u8::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for TreeCode {
    type Err = Error;

    /// Accepts any valid level sequence and canonicalizes it.
    fn from_str(s: &str) -> Result<Self> {
        let levels: Vec<usize> = s
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad level `{x}` in tree code"))))
            .collect::<Result<_>>()?;
        let valid = levels.first() == Some(&0)
            && levels.len() <= crate::graph::MAX_VERTICES
            && levels[1..].iter().all(|&l| l >= 1)
            && levels.windows(2).all(|w| w[1] <= w[0] + 1);
        if !valid {
            return Err(Error::Parse(format!("`{s}` is not a level sequence")));
        }
        TreeCode::from_graph(&Graph::from_edges(levels.len(), layout_edges(&levels))?)
    }
}

/// Each entry's parent is the nearest earlier entry one level up.
fn layout_edges(levels: &[usize]) -> Vec<(usize, usize)> {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (i, &l) in levels.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if levels[j] < l {
                break;
            }
            stack.pop();
        }
        if let Some(&j) = stack.last() {
            edges.push((j, i));
        }
        stack.push(i);
    }
    edges
}

fn layout_degrees(levels: &[usize]) -> Vec<usize> {
    let mut deg = vec![0; levels.len()];
    for (u, v) in layout_edges(levels) {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg
}

/// Which trees [`free_trees`] emits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeFilter {
    All,
    /// Some vertex has degree at least this.
    MaxDegreeAtLeast(usize),
    /// Some vertex has exactly this degree.
    HasDegree(usize),
}

impl TreeFilter {
    fn accepts(self, degrees: &[usize]) -> bool {
        match self {
            TreeFilter::All => true,
            TreeFilter::MaxDegreeAtLeast(k) => degrees.iter().any(|&d| d >= k),
            TreeFilter::HasDegree(k) => degrees.contains(&k),
        }
    }
}

/// Streams the free trees on `n` vertices passing `filter`, each
/// isomorphism class once. The order is fixed for a given `n`.
pub fn free_trees(n: usize, filter: TreeFilter) -> Result<FreeTrees> {
    free_trees_bounded(n, filter, DEFAULT_MAX_TREE_VERTICES)
}

pub fn free_trees_bounded(n: usize, filter: TreeFilter, max_n: usize) -> Result<FreeTrees> {
    if n == 0 || n > max_n || n > crate::graph::MAX_VERTICES {
        return Err(Error::SizeBound(format!("tree enumeration needs 1 <= n <= {max_n}, got {n}")));
    }
    let layout = if n == 1 {
        vec![0]
    } else {
        (0..=n / 2).chain(1..n.div_ceil(2)).collect()
    };
    Ok(FreeTrees { n, filter, layout: Some(layout) })
}

pub struct FreeTrees {
    n: usize,
    filter: TreeFilter,
    layout: Option<Vec<usize>>,
}

impl Iterator for FreeTrees {
    type Item = TreeCode;

    fn next(&mut self) -> Option<TreeCode> {
        loop {
            let current = self.layout.take()?;
            if self.n == 1 {
                return self.filter.accepts(&[0]).then(|| TreeCode { levels: vec![0] });
            }
            let tree = next_tree(current)?;
            self.layout = next_rooted_tree(&tree, None);
            if self.filter.accepts(&layout_degrees(&tree)) {
                let g = Graph::from_edges(self.n, layout_edges(&tree)).expect("layouts decode to trees");
                return Some(TreeCode::from_graph(&g).expect("layouts decode to trees"));
            }
        }
    }
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                if p == 0 {
                    return None;
                }
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] + 1 != pred[p] {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Moves `candidate` forward to the next layout that is rooted at a centre.
fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let (lh, rh) = (left.iter().max().copied().unwrap_or(0), rest.iter().max().copied().unwrap_or(0));
    let valid = rh > lh || (rh == lh && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut fresh = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&fresh);
        let height = new_left.iter().max().copied().unwrap_or(0);
        let len = fresh.len();
        for (k, slot) in fresh[len - (height + 1)..].iter_mut().enumerate() {
            *slot = k + 1;
        }
    }
    Some(fresh)
}

/// The first subtree of the root (levels lowered by one) and everything else
/// (re-rooted at 0).
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout.iter().enumerate().filter(|&(_, &l)| l == 1).nth(1).map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_path, make_star};
    use std::collections::HashSet;

    #[test]
    fn counts() {
        let want = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &w) in want.iter().enumerate() {
            let codes: HashSet<TreeCode> = free_trees(i + 1, TreeFilter::All).unwrap().collect();
            assert_eq!(codes.len(), w, "n = {}", i + 1);
            assert_eq!(free_trees(i + 1, TreeFilter::All).unwrap().count(), w, "duplicates at n = {}", i + 1);
        }
    }

    #[test]
    fn codes_decode_to_trees() {
        for code in free_trees(10, TreeFilter::All).unwrap() {
            let g = code.to_graph();
            assert!(g.is_tree());
            assert_eq!(TreeCode::from_graph(&g).unwrap(), code);
            assert_eq!(code.to_string().parse::<TreeCode>().unwrap(), code);
        }
    }

    #[test]
    fn isomorphic_labellings_agree() {
        let a = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let b = Graph::from_edges(5, [(3, 0), (0, 4), (4, 1), (1, 2)]).unwrap();
        assert_eq!(TreeCode::from_graph(&a).unwrap(), TreeCode::from_graph(&b).unwrap());
        assert_ne!(TreeCode::from_graph(&make_path(4).unwrap()).unwrap(), TreeCode::from_graph(&make_star(4).unwrap()).unwrap());
        assert_eq!(TreeCode::from_graph(&make_star(4).unwrap()).unwrap().to_string(), "0,1,1,1");
    }

    #[test]
    fn filters() {
        let big: Vec<TreeCode> = free_trees(4, TreeFilter::MaxDegreeAtLeast(3)).unwrap().collect();
        assert_eq!(big.len(), 1);
        assert_eq!(big[0].max_degree(), 3);
        for k in 1..=6 {
            let direct = free_trees(7, TreeFilter::All).unwrap().filter(|c| c.degrees().contains(&k)).count();
            assert_eq!(free_trees(7, TreeFilter::HasDegree(k)).unwrap().count(), direct);
        }
        assert!(free_trees(0, TreeFilter::All).is_err());
        assert!(free_trees(20, TreeFilter::All).is_err());
        assert!("0,2".parse::<TreeCode>().is_err());
    }
}
