//! Triangular shifted plane partitions, the diagonal statistic `U_r`, the
//! flips `pi_r` and their even/odd products `rho` and `gamma`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumerate::{run_shards, EnumOptions};
use crate::error::{Error, Result};

/// An element of `TSPP_{n,m}`: values `b_ij` on the shifted staircase
/// `1 <= i <= j <= n+m-1`.
///
/// Out-of-shape reads follow the boundary convention `b_{0,j} = n` and
/// `b_{i,n+m} = n - i`, so the last one can be negative when `m >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TsppJson", into = "TsppJson")]
pub struct Tspp {
    n: usize,
    m: usize,
    cells: Vec<u8>,
}

/// Which product of flips an invariant set is taken under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TsppInvolution {
    /// `pi_2 pi_4 ...`
    Rho,
    /// `pi_1 pi_3 ...`, needs `m <= 1`.
    Gamma,
}

impl TsppInvolution {
    /// Diagonal indices `r <= last` of the right parity. The product runs
    /// over every diagonal of the staircase, `last = n + m - 1`; when
    /// `m <= 1` that is the same as stopping at `n`.
    pub fn diagonals(self, last: usize) -> impl Iterator<Item = usize> {
        let start = match self {
            TsppInvolution::Rho => 2,
            TsppInvolution::Gamma => 1,
        };
        (start..=last).step_by(2)
    }
}

/// Row-major layout of the staircase for a given `N = n + m`.
#[derive(Clone, Copy, Debug)]
struct Layout {
    n: usize,
    big_n: usize,
}

impl Layout {
    fn new(n: usize, m: usize) -> Self {
        Layout { n, big_n: n + m }
    }

    fn len(self) -> usize {
        self.big_n * (self.big_n - 1) / 2
    }

    fn index(self, i: usize, j: usize) -> usize {
        (i - 1) * self.big_n - (i - 1) * i / 2 + (j - i)
    }

    fn positions(self) -> Vec<(usize, usize)> {
        (1..self.big_n)
            .flat_map(|i| (i..self.big_n).map(move |j| (i, j)))
            .collect()
    }

    /// `b_ij` including the boundary rows and columns.
    fn get(self, cells: &[u8], i: usize, j: usize) -> i64 {
        if i == 0 {
            self.n as i64
        } else if j == self.big_n {
            self.n as i64 - i as i64
        } else {
            debug_assert!(i <= j && j < self.big_n);
            i64::from(cells[self.index(i, j)])
        }
    }

    fn lower(self, i: usize) -> i64 {
        (self.n as i64 - i as i64).max(0)
    }

    /// Value of `b_ij` after flipping it.
    fn flipped(self, cells: &[u8], i: usize, j: usize) -> i64 {
        let g = |a, b| self.get(cells, a, b);
        if i == j {
            g(i - 1, i) + g(i, i + 1) - g(i, i)
        } else {
            g(i - 1, j).min(g(i, j - 1)) + g(i, j + 1).max(g(i + 1, j)) - g(i, j)
        }
    }
}

impl Tspp {
    /// Builds and validates from rows `[b_11..b_1,N-1], [b_22..], ...`.
    pub fn new(n: usize, m: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("tspp", "n must be at least 1"));
        }
        let big_n = n + m;
        if rows.len() != big_n - 1 {
            return Err(Error::invalid(
                "tspp",
                format!("B1: expected {} rows, got {}", big_n - 1, rows.len()),
            ));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != big_n - 1 - r {
                return Err(Error::invalid(
                    "tspp",
                    format!("B1: row {} has length {}, expected {}", r + 1, row.len(), big_n - 1 - r),
                ));
            }
        }
        let t = Tspp {
            n,
            m,
            cells: rows.into_iter().flatten().collect(),
        };
        t.validate()?;
        Ok(t)
    }

    fn layout(&self) -> Layout {
        Layout::new(self.n, self.m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `N = n + m`; the staircase has `N - 1` rows.
    pub fn size(&self) -> usize {
        self.n + self.m
    }

    /// `b_ij` with the boundary convention for `i = 0` and `j = n + m`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.layout().get(&self.cells, i, j)
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        let l = self.layout();
        (1..l.big_n)
            .map(|i| (i..l.big_n).map(|j| self.cells[l.index(i, j)]).collect())
            .collect()
    }

    /// Checks axioms B1, B2 and monotonicity along rows and columns.
    pub fn validate(&self) -> Result<()> {
        let l = self.layout();
        if self.cells.len() != l.len() {
            return Err(Error::invalid("tspp", "B1: wrong number of cells"));
        }
        for (i, j) in l.positions() {
            let b = self.get(i, j);
            if b < l.lower(i) || b > self.n as i64 {
                return Err(Error::invalid(
                    "tspp",
                    format!("B2: b_{i},{j} = {b} outside [{}, {}]", l.lower(i), self.n),
                ));
            }
            if b > self.get(i - 1, j) {
                return Err(Error::invalid("tspp", format!("column {j} increases at row {i}")));
            }
            if j > i && b > self.get(i, j - 1) {
                return Err(Error::invalid("tspp", format!("row {i} increases at column {j}")));
            }
        }
        Ok(())
    }

    fn check_r(&self, r: usize) -> Result<()> {
        if r == 0 || r > self.size() {
            return Err(Error::OutOfRange {
                what: "r",
                value: r as i64,
                range: format!("[1, {}]", self.size()),
            });
        }
        Ok(())
    }

    /// `U_r(b)`: drops across diagonal `r` plus, for the rows that diagonal
    /// misses, whether the last entry exceeds its lower bound.
    pub fn stat_u(&self, r: usize) -> Result<usize> {
        self.check_r(r)?;
        let big_n = self.size();
        let n = self.n as i64;
        let drops: i64 = (1..=big_n - r)
            .map(|t| self.get(t, t + r - 1) - self.get(t, t + r))
            .sum();
        let tail = (big_n - r + 1..big_n)
            .filter(|&t| self.get(t, big_n - 1) > n - t as i64)
            .count();
        Ok(drops as usize + tail)
    }

    /// `N - 1 - U_r(b)`.
    pub fn stat_ubar(&self, r: usize) -> Result<usize> {
        Ok(self.size() - 1 - self.stat_u(r)?)
    }

    fn check_diagonal_flip(&self, what: &str) -> Result<()> {
        if self.m >= 2 {
            return Err(Error::domain(
                "flip",
                format!("{what} needs m <= 1 (m = {})", self.m),
            ));
        }
        Ok(())
    }

    /// Flips the single part `b_ij`.
    pub fn flip_part(&self, i: usize, j: usize) -> Result<Tspp> {
        if i == 0 || i > j || j >= self.size() {
            return Err(Error::domain("flip", format!("({i},{j}) is not a cell")));
        }
        if i == j {
            self.check_diagonal_flip("a diagonal flip")?;
        }
        let l = self.layout();
        let mut out = self.clone();
        out.cells[l.index(i, j)] = l.flipped(&self.cells, i, j) as u8;
        Ok(out)
    }

    /// `pi_r`: flips every part on diagonal `r`, i.e. `b_{i,i+r-1}`.
    pub fn pi(&self, r: usize) -> Result<Tspp> {
        self.check_r(r)?;
        if r == 1 {
            self.check_diagonal_flip("pi_1")?;
        }
        let l = self.layout();
        let mut out = self.clone();
        for i in 1..=self.size() - r {
            let j = i + r - 1;
            out.cells[l.index(i, j)] = l.flipped(&self.cells, i, j) as u8;
        }
        Ok(out)
    }

    /// Applies the flips of `which` in increasing order of `r`.
    pub fn apply(&self, which: TsppInvolution) -> Result<Tspp> {
        if which == TsppInvolution::Gamma {
            self.check_diagonal_flip("gamma")?;
        }
        which
            .diagonals(self.size() - 1)
            .try_fold(self.clone(), |b, r| b.pi(r))
    }

    pub fn rho(&self) -> Result<Tspp> {
        self.apply(TsppInvolution::Rho)
    }

    pub fn gamma(&self) -> Result<Tspp> {
        self.apply(TsppInvolution::Gamma)
    }

    /// Staggered layout, one row per line, as triangular arrays are usually
    /// drawn.
    pub fn to_ascii(&self) -> String {
        let rows = self.rows();
        if rows.is_empty() {
            return "(empty)\n".to_string();
        }
        let width = self.n.to_string().len();
        let mut out = String::new();
        for (r, row) in rows.iter().enumerate() {
            out.push_str(&" ".repeat(r * (width + 1)));
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Tspp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

#[derive(Serialize, Deserialize)]
struct TsppJson {
    kind: String,
    n: usize,
    m: usize,
    rows: Vec<Vec<u8>>,
}

impl TryFrom<TsppJson> for Tspp {
    type Error = Error;

    fn try_from(j: TsppJson) -> Result<Self> {
        if j.kind != "tspp" {
            return Err(Error::invalid("tspp", format!("kind is {:?}", j.kind)));
        }
        Tspp::new(j.n, j.m, j.rows)
    }
}

impl From<Tspp> for TsppJson {
    fn from(t: Tspp) -> Self {
        TsppJson {
            kind: "tspp".into(),
            n: t.n,
            m: t.m,
            rows: t.rows(),
        }
    }
}

/// Backtracking search over the staircase in row-major order, trying values
/// in increasing order, so solutions come out lexicographically sorted.
///
/// Optional flip constraints pin parts to their own flip; each one is
/// checked as soon as the last of its neighbours has been assigned.
struct Search {
    layout: Layout,
    positions: Vec<(usize, usize)>,
    /// For each position, the constrained cells whose check fires there.
    checks: Vec<Vec<(usize, usize)>>,
}

impl Search {
    fn new(n: usize, m: usize, invariant: Option<TsppInvolution>) -> Self {
        let layout = Layout::new(n, m);
        let positions = layout.positions();
        let mut checks = vec![Vec::new(); positions.len()];
        if let Some(which) = invariant {
            let big_n = layout.big_n;
            for r in which.diagonals(big_n - 1) {
                for i in 1..=big_n - r {
                    let j = i + r - 1;
                    let trigger = if i < j {
                        (i + 1, j)
                    } else if j + 1 < big_n {
                        (i, j + 1)
                    } else {
                        (i, j)
                    };
                    checks[layout.index(trigger.0, trigger.1)].push((i, j));
                }
            }
        }
        Search {
            layout,
            positions,
            checks,
        }
    }

    fn range(&self, cells: &[u8], p: usize) -> (i64, i64) {
        let (i, j) = self.positions[p];
        let l = self.layout;
        let mut hi = l.get(cells, i - 1, j);
        if j > i {
            hi = hi.min(l.get(cells, i, j - 1));
        }
        (l.lower(i), hi)
    }

    fn run(&self, cells: &mut Vec<u8>, p: usize, visit: &mut dyn FnMut(&[u8])) {
        if p == self.positions.len() {
            visit(cells);
            return;
        }
        let (lo, hi) = self.range(cells, p);
        for v in lo..=hi {
            cells[p] = v as u8;
            let ok = self.checks[p].iter().all(|&(i, j)| {
                self.layout.flipped(cells, i, j) == self.layout.get(cells, i, j)
            });
            if ok {
                self.run(cells, p + 1, visit);
            }
        }
        cells[p] = 0;
    }

    /// Valid assignments of the first `depth` positions.
    fn prefixes(&self, depth: usize) -> Vec<Vec<u8>> {
        let depth = depth.min(self.positions.len());
        let truncated = Search {
            layout: self.layout,
            positions: self.positions[..depth].to_vec(),
            checks: self.checks[..depth].to_vec(),
        };
        let mut out = Vec::new();
        let mut cells = vec![0u8; self.positions.len()];
        truncated.run(&mut cells, 0, &mut |c| out.push(c[..depth].to_vec()));
        out
    }

    fn collect<T: Send>(
        &self,
        jobs: usize,
        make: impl Fn(&[u8]) -> T + Send + Sync,
    ) -> Vec<T> {
        let depth = if jobs > 1 { self.layout.big_n - 1 } else { 0 };
        let shards = self.prefixes(depth);
        run_shards(shards, jobs, |prefix| {
            let mut cells = vec![0u8; self.positions.len()];
            cells[..prefix.len()].copy_from_slice(prefix);
            let mut out = Vec::new();
            self.run(&mut cells, prefix.len(), &mut |c| out.push(make(c)));
            out
        })
    }
}

fn check_args(n: usize, m: usize, opts: &EnumOptions) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("tspp", "n must be at least 1"));
    }
    opts.check(n + m)
}

/// All of `TSPP_{n,m}` in lexicographic order of the row-major cell list.
pub fn enumerate_tspp(n: usize, m: usize, opts: &EnumOptions) -> Result<Vec<Tspp>> {
    check_args(n, m, opts)?;
    let search = Search::new(n, m, None);
    Ok(search.collect(opts.jobs, |c| Tspp {
        n,
        m,
        cells: c.to_vec(),
    }))
}

/// `|TSPP_{n,m}|` without materializing the elements.
pub fn count_tspp(n: usize, m: usize, opts: &EnumOptions) -> Result<u64> {
    check_args(n, m, opts)?;
    let search = Search::new(n, m, None);
    let mut count = 0u64;
    search.run(&mut vec![0u8; search.positions.len()], 0, &mut |_| count += 1);
    Ok(count)
}

/// Elements fixed by `rho` or `gamma`, found directly: the search pins every
/// flipped part to its flip instead of filtering the full set.
pub fn enumerate_tspp_invariant(
    n: usize,
    m: usize,
    which: TsppInvolution,
    opts: &EnumOptions,
) -> Result<Vec<Tspp>> {
    check_args(n, m, opts)?;
    if which == TsppInvolution::Gamma && m >= 2 {
        return Err(Error::domain("gamma", format!("needs m <= 1 (m = {m})")));
    }
    let search = Search::new(n, m, Some(which));
    Ok(search.collect(opts.jobs, |c| Tspp {
        n,
        m,
        cells: c.to_vec(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, rows: &[&[u8]]) -> Tspp {
        Tspp::new(n, 0, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn example_8() -> Tspp {
        t(
            8,
            &[
                &[8, 8, 8, 8, 8, 8, 8],
                &[8, 8, 8, 8, 7, 6],
                &[8, 8, 7, 7, 6],
                &[6, 5, 5, 4],
                &[4, 4, 3],
                &[3, 3],
                &[1],
            ],
        )
    }

    fn example_6() -> Tspp {
        t(6, &[&[6, 6, 6, 6, 5], &[6, 5, 5, 5], &[4, 4, 4], &[4, 4], &[1]])
    }

    #[test]
    fn statistic_on_worked_example() {
        let b = example_8();
        let u: Vec<usize> = (1..=8).map(|r| b.stat_u(r).unwrap()).collect();
        assert_eq!(u, vec![1, 3, 2, 3, 3, 2, 3, 3]);
        assert_eq!(b.stat_ubar(1).unwrap(), 6);
        assert!(b.stat_u(9).is_err());
        assert!(b.stat_u(0).is_err());
    }

    #[test]
    fn maximal_element_of_tspp2() {
        let b = t(2, &[&[2]]);
        assert_eq!(b.stat_u(1).unwrap(), 1);
        assert_eq!(b.stat_u(2).unwrap(), 1);
    }

    #[test]
    fn flips_on_worked_example() {
        let b = example_6();
        let p2 = b.pi(2).unwrap();
        assert_eq!(
            p2.rows(),
            vec![vec![6, 6, 6, 6, 5], vec![6, 6, 5, 5], vec![4, 4, 4], vec![4, 2], vec![1]]
        );
        let p1 = b.pi(1).unwrap();
        let diag: Vec<i64> = (1..=5).map(|i| p1.get(i, i)).collect();
        assert_eq!(diag, vec![6, 5, 5, 4, 4]);
        assert_eq!(b.flip_part(5, 5).unwrap().get(5, 5), 4);
        assert_eq!(b.flip_part(4, 5).unwrap().get(4, 5), 2);
        assert_eq!(b.pi(6).unwrap(), b);
    }

    #[test]
    fn displayed_invariant_elements() {
        let rho = t(
            8,
            &[
                &[8, 8, 8, 8, 7, 7, 7],
                &[8, 8, 8, 7, 7, 7],
                &[7, 7, 7, 7, 7],
                &[6, 6, 6, 5],
                &[6, 5, 4],
                &[4, 3],
                &[1],
            ],
        );
        assert_eq!(rho.rho().unwrap(), rho);
        let gamma = t(
            7,
            &[
                &[7, 7, 7, 7, 7, 7],
                &[6, 5, 5, 5, 5],
                &[5, 5, 5, 5],
                &[5, 5, 4],
                &[4, 3],
                &[2],
            ],
        );
        assert_eq!(gamma.gamma().unwrap(), gamma);
    }

    #[test]
    fn diagonal_flip_needs_small_m() {
        let all = enumerate_tspp(2, 2, &EnumOptions::default()).unwrap();
        assert!(all[0].flip_part(1, 1).is_err());
        assert!(all[0].pi(1).is_err());
        assert!(all[0].gamma().is_err());
        assert!(all[0].flip_part(1, 2).is_ok());
    }

    #[test]
    fn counts() {
        let opts = EnumOptions::default();
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_tspp(n, 0, &opts).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 7, 42, 429, 7436]);
        assert_eq!(count_tspp(6, 0, &opts).unwrap(), 7436);
        assert_eq!(enumerate_tspp(1, 0, &opts).unwrap()[0].rows(), Vec::<Vec<u8>>::new());
    }

    #[test]
    fn enumeration_is_sorted_and_job_independent() {
        let opts = EnumOptions::default();
        let one = enumerate_tspp(5, 1, &opts).unwrap();
        let mut sorted = one.clone();
        sorted.sort();
        assert_eq!(one, sorted);
        assert_eq!(one, enumerate_tspp(5, 1, &opts.with_jobs(3)).unwrap());
    }

    #[test]
    fn size_limit() {
        let err = enumerate_tspp(6, 4, &EnumOptions::default()).unwrap_err();
        assert_eq!(err, Error::SizeLimit { size: 10, limit: 9 });
    }

    #[test]
    fn direct_invariant_search_matches_filter() {
        let opts = EnumOptions::default();
        for n in 1..=7 {
            for m in 0..=1 {
                if n + m > 7 {
                    continue;
                }
                let all = enumerate_tspp(n, m, &opts).unwrap();
                for which in [TsppInvolution::Rho, TsppInvolution::Gamma] {
                    let filtered: Vec<Tspp> = all
                        .iter()
                        .filter(|b| b.apply(which).unwrap() == **b)
                        .cloned()
                        .collect();
                    let direct = enumerate_tspp_invariant(n, m, which, &opts).unwrap();
                    assert_eq!(direct, filtered, "n={n} m={m} {which:?}");
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let b = example_6();
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(
            s,
            r#"{"kind":"tspp","n":6,"m":0,"rows":[[6,6,6,6,5],[6,5,5,5],[4,4,4],[4,4],[1]]}"#
        );
        assert_eq!(serde_json::from_str::<Tspp>(&s).unwrap(), b);
        let bad = r#"{"kind":"tspp","n":2,"m":0,"rows":[[3]]}"#;
        assert!(serde_json::from_str::<Tspp>(bad).is_err());
    }
}
