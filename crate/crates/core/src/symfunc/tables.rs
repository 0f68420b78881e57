//! Per-degree transition data into the monomial basis.
//!
//! Every basis element `b_λ` (for `b ∈ {e, p, s}`) is stored as its sparse
//! monomial expansion. Tables are built lazily, once per degree, and shared
//! read-only afterwards.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::{partitions_of, Partition};

/// Sparse row: `(partition index, coefficient)`, indices ascending.
pub(crate) type Row = Vec<(usize, BigInt)>;

/// Semistandard tableau counts `K(λ, μ)` for all `λ, μ ⊢ n`.
#[derive(Debug)]
pub struct KostkaTable {
    degree: usize,
    /// `entries[i][j] = K(partitions[i], partitions[j])`.
    entries: Vec<Vec<u64>>,
}

impl KostkaTable {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `K(λ, μ)`; zero when either weight differs from the table degree.
    pub fn get(&self, shape: &Partition, content: &Partition) -> u64 {
        if shape.weight() != self.degree || content.weight() != self.degree {
            return 0;
        }
        let t = tables(self.degree);
        self.entries[t.index_of(shape)][t.index_of(content)]
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.entries[i]
    }
}

#[derive(Debug)]
pub struct DegreeTables {
    degree: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    e_rows: OnceLock<Vec<Row>>,
    p_rows: OnceLock<Vec<Row>>,
    kostka: OnceLock<Arc<KostkaTable>>,
    s_rows: OnceLock<Vec<Row>>,
}

static REGISTRY: OnceLock<Mutex<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();

/// Shared tables for degree `n`.
pub fn tables(n: usize) -> Arc<DegreeTables> {
    let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = reg.lock().expect("table registry poisoned");
    guard.entry(n).or_insert_with(|| Arc::new(DegreeTables::new(n))).clone()
}

/// Shared Kostka table for degree `n`.
pub fn kostka_table(n: usize) -> Arc<KostkaTable> {
    tables(n).kostka()
}

impl DegreeTables {
    fn new(degree: usize) -> Self {
        let partitions = partitions_of(degree);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        DegreeTables {
            degree,
            partitions,
            index,
            e_rows: OnceLock::new(),
            p_rows: OnceLock::new(),
            kostka: OnceLock::new(),
            s_rows: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Partitions of the degree in enumeration (reverse-lexicographic) order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub(crate) fn e_rows(&self) -> &[Row] {
        self.e_rows.get_or_init(|| {
            let mut memo = HashMap::new();
            self.build_rows(|rows, cols| zero_one_count(rows, cols, &mut memo))
        })
    }

    pub(crate) fn p_rows(&self) -> &[Row] {
        self.p_rows.get_or_init(|| {
            let mut memo = HashMap::new();
            self.build_rows(|rows, cols| power_count(rows, cols, &mut memo))
        })
    }

    pub(crate) fn s_rows(&self) -> &[Row] {
        self.s_rows.get_or_init(|| {
            let k = self.kostka();
            (0..self.partitions.len())
                .map(|i| {
                    k.row(i)
                        .iter()
                        .enumerate()
                        .filter(|(_, &v)| v != 0)
                        .map(|(j, &v)| (j, BigInt::from(v)))
                        .collect()
                })
                .collect()
        })
    }

    pub fn kostka(&self) -> Arc<KostkaTable> {
        self.kostka
            .get_or_init(|| {
                let mut memo = HashMap::new();
                let entries = self
                    .partitions
                    .iter()
                    .map(|shape| {
                        self.partitions
                            .iter()
                            .map(|content| {
                                if shape.dominates(content).unwrap_or(false) {
                                    kostka_count(shape.parts(), content.parts(), &mut memo)
                                } else {
                                    0
                                }
                            })
                            .collect()
                    })
                    .collect();
                Arc::new(KostkaTable { degree: self.degree, entries })
            })
            .clone()
    }

    fn build_rows(&self, mut count: impl FnMut(&[usize], &[usize]) -> BigInt) -> Vec<Row> {
        self.partitions
            .iter()
            .map(|lam| {
                self.partitions
                    .iter()
                    .enumerate()
                    .filter_map(|(j, mu)| {
                        let c = count(lam.parts(), mu.parts());
                        (!c.is_zero()).then_some((j, c))
                    })
                    .collect()
            })
            .collect()
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Groups a weakly decreasing list into `(value, multiplicity)`.
fn groups(cols: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &c in cols {
        match out.last_mut() {
            Some((v, m)) if *v == c => *m += 1,
            _ => out.push((c, 1)),
        }
    }
    out
}

fn normalized(mut cols: Vec<usize>) -> Vec<usize> {
    cols.retain(|&c| c > 0);
    cols.sort_unstable_by(|a, b| b.cmp(a));
    cols
}

type Memo = HashMap<(Vec<usize>, Vec<usize>), BigInt>;

/// Number of 0-1 matrices with row sums `rows` and column sums `cols`, i.e.
/// the coefficient of `m_cols` in `e_rows`. Both arguments are weakly
/// decreasing; the count is symmetric in the order of either.
fn zero_one_count(rows: &[usize], cols: &[usize], memo: &mut Memo) -> BigInt {
    let rs: usize = rows.iter().sum();
    let cs: usize = cols.iter().sum();
    if rs != cs || cols.first().copied().unwrap_or(0) > rows.len() {
        return BigInt::zero();
    }
    if rows.is_empty() {
        return BigInt::one();
    }
    let key = (rows.to_vec(), cols.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = rows[0];
    let g = groups(cols);
    let mut total = BigInt::zero();
    // choose k_v columns from each value class, Σ k_v = r
    let mut picks = vec![0usize; g.len()];
    fn walk(
        gi: usize,
        left: usize,
        g: &[(usize, usize)],
        picks: &mut Vec<usize>,
        rows: &[usize],
        memo: &mut Memo,
        total: &mut BigInt,
    ) {
        if gi == g.len() {
            if left != 0 {
                return;
            }
            let mut ways = BigInt::one();
            let mut next = Vec::new();
            for (i, &(v, m)) in g.iter().enumerate() {
                ways *= binomial(m, picks[i]);
                next.extend(std::iter::repeat_n(v - 1, picks[i]));
                next.extend(std::iter::repeat_n(v, m - picks[i]));
            }
            let sub = zero_one_count(&rows[1..], &normalized(next), memo);
            if !sub.is_zero() {
                *total += ways * sub;
            }
            return;
        }
        let (_, m) = g[gi];
        for k in 0..=m.min(left) {
            picks[gi] = k;
            walk(gi + 1, left - k, g, picks, rows, memo, total);
        }
        picks[gi] = 0;
    }
    walk(0, r, &g, &mut picks, rows, memo, &mut total);
    memo.insert(key, total.clone());
    total
}

/// Coefficient of `m_cols` in `p_rows`: ways to send each row part to one
/// column so that column totals equal `cols`.
fn power_count(rows: &[usize], cols: &[usize], memo: &mut Memo) -> BigInt {
    let rs: usize = rows.iter().sum();
    let cs: usize = cols.iter().sum();
    if rs != cs {
        return BigInt::zero();
    }
    if rows.is_empty() {
        return BigInt::one();
    }
    let key = (rows.to_vec(), cols.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = rows[0];
    let mut total = BigInt::zero();
    for (v, m) in groups(cols) {
        if v < r {
            continue;
        }
        let mut next = cols.to_vec();
        let pos = next.iter().position(|&c| c == v).unwrap();
        next[pos] = v - r;
        let sub = power_count(&rows[1..], &normalized(next), memo);
        total += sub * m;
    }
    memo.insert(key, total.clone());
    total
}

/// Semistandard tableaux of `shape` with `content`, by stripping the largest
/// entry as a horizontal strip.
fn kostka_count(
    shape: &[usize],
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>,
) -> u64 {
    if content.is_empty() {
        return u64::from(shape.is_empty());
    }
    if shape.len() > content.len() {
        // column strictness: a column of height h needs h distinct entries
        return 0;
    }
    let key = (shape.to_vec(), content.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = *content.last().unwrap();
    let rest = &content[..content.len() - 1];
    let mut total = 0u64;
    let mut inner = shape.to_vec();
    // inner[i] ranges over [shape[i+1], shape[i]]; total removed = k
    fn strips(
        i: usize,
        left: usize,
        shape: &[usize],
        inner: &mut Vec<usize>,
        rest: &[usize],
        memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>,
        total: &mut u64,
    ) {
        if i == shape.len() {
            if left == 0 {
                let nu: Vec<usize> = inner.iter().copied().filter(|&x| x > 0).collect();
                *total += kostka_count(&nu, rest, memo);
            }
            return;
        }
        let lo = shape.get(i + 1).copied().unwrap_or(0);
        let hi = shape[i];
        for keep in (lo..=hi).rev() {
            let removed = hi - keep;
            if removed > left {
                break;
            }
            inner[i] = keep;
            strips(i + 1, left - removed, shape, inner, rest, memo, total);
        }
        inner[i] = hi;
    }
    strips(0, k, shape, &mut inner, rest, memo, &mut total);
    memo.insert(key, total);
    total
}
