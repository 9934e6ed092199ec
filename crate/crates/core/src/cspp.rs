//! Restricted column-strict plane partitions: the statistic `Ubar_r`, the
//! bijection with triangular shifted plane partitions, and the twisted
//! Bender-Knuth involutions with their even and odd products.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumerate::{run_shards, EnumOptions};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tspp::{enumerate_tspp_invariant, Tspp, TsppInvolution};

/// An element of `CSPP_{n,m}`: rows weakly decreasing, columns strictly
/// decreasing, at most `n` columns, and every entry of column `j` at most
/// `n + m - j`. An entry equal to that cap is saturated.
///
/// `n = 0` is allowed and admits only the empty array; it shows up as one
/// half of a pair of plane partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CsppJson", into = "CsppJson")]
pub struct Cspp {
    n: usize,
    m: usize,
    rows: Vec<Vec<u8>>,
}

/// Which product of twisted Bender-Knuth involutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsppInvolution {
    /// `tbk_2 tbk_4 ...`
    RhoTilde,
    /// `tbk_1 tbk_3 ...`, needs `m <= 1`.
    GammaTilde,
}

impl CsppInvolution {
    /// Indices `r <= last` of the factors, with `last = n + m - 1` as for the
    /// flips.
    pub fn diagonals(self, last: usize) -> impl Iterator<Item = usize> {
        let start = match self {
            CsppInvolution::RhoTilde => 2,
            CsppInvolution::GammaTilde => 1,
        };
        (start..=last).step_by(2)
    }

    fn on_tspp(self) -> TsppInvolution {
        match self {
            CsppInvolution::RhoTilde => TsppInvolution::Rho,
            CsppInvolution::GammaTilde => TsppInvolution::Gamma,
        }
    }
}

impl Cspp {
    pub fn new(n: usize, m: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        let c = Cspp { n, m, rows };
        c.validate()?;
        Ok(c)
    }

    pub fn empty(n: usize, m: usize) -> Self {
        Cspp {
            n,
            m,
            rows: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `N = n + m`.
    pub fn size(&self) -> usize {
        self.n + self.m
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row lengths.
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows shrink")
    }

    /// `c_ij` with 1-based indices, or 0 outside the shape.
    pub fn get(&self, i: usize, j: usize) -> u8 {
        if i == 0 || j == 0 {
            return 0;
        }
        self.rows
            .get(i - 1)
            .and_then(|r| r.get(j - 1))
            .copied()
            .unwrap_or(0)
    }

    /// Cap of column `j`: `N - j`, negative past column `N`.
    pub fn cap(&self, j: usize) -> i64 {
        self.size() as i64 - j as i64
    }

    pub fn is_saturated(&self, i: usize, j: usize) -> bool {
        let v = self.get(i, j);
        v > 0 && i64::from(v) == self.cap(j)
    }

    /// Checks row and column monotonicity and axioms C1, C2.
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| Err(Error::invalid("cspp", reason));
        for (r, row) in self.rows.iter().enumerate() {
            let i = r + 1;
            if row.is_empty() {
                return fail(format!("row {i} is empty"));
            }
            if row.len() > self.n {
                return fail(format!("C1: row {i} has {} > n = {} columns", row.len(), self.n));
            }
            if r > 0 && row.len() > self.rows[r - 1].len() {
                return fail(format!("row {i} is longer than row {}", i - 1));
            }
            for (c, &v) in row.iter().enumerate() {
                let j = c + 1;
                if v == 0 {
                    return fail(format!("entry ({i},{j}) is zero"));
                }
                if i64::from(v) > self.cap(j) {
                    return fail(format!("C2: entry ({i},{j}) = {v} exceeds {}", self.cap(j)));
                }
                if c > 0 && v > row[c - 1] {
                    return fail(format!("row {i} increases at column {j}"));
                }
                if r > 0 && v >= self.rows[r - 1][c] {
                    return fail(format!("column {j} is not strict at row {i}"));
                }
            }
        }
        Ok(())
    }

    /// Shape of `c_{>=k}`, the entries at least `k`.
    pub fn shape_at_least(&self, k: u8) -> Partition {
        Partition::new((1..=self.rows.len()).map(|i| self.border(i, k)).collect())
            .expect("column strictness keeps borders decreasing")
    }

    pub fn max_entry(&self) -> u8 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// `#{l : c_il >= k}`, the length of row `i` of `c_{>=k}`.
    pub fn border(&self, i: usize, k: u8) -> usize {
        if i == 0 {
            return 0;
        }
        self.rows
            .get(i - 1)
            .map_or(0, |row| row.iter().take_while(|&&v| v >= k).count())
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

    /// Number of parts equal to `r` plus the saturated parts below `r`.
    pub fn stat_ubar(&self, r: usize) -> Result<usize> {
        self.check_r(r)?;
        Ok(self.ubar(r))
    }

    /// `stat_ubar` without the range check; any `r >= 1` makes sense here.
    pub(crate) fn ubar(&self, r: usize) -> usize {
        let equal = self.rows.iter().flatten().filter(|&&v| usize::from(v) == r).count();
        let big_n = self.size();
        let saturated = (1..r)
            .filter(|&k| k < big_n && usize::from(self.get(1, big_n - k)) == k)
            .count();
        equal + saturated
    }

    /// The triangular shifted plane partition with
    /// `n - b_ij = border(N - j, 1 - i + j)`.
    pub fn to_tspp(&self) -> Result<Tspp> {
        if self.n == 0 {
            return Err(Error::domain("gamma_bij", "needs n >= 1"));
        }
        let big_n = self.size();
        let rows = (1..big_n)
            .map(|i| {
                (i..big_n)
                    .map(|j| (self.n - self.border(big_n - j, (1 + j - i) as u8)) as u8)
                    .collect()
            })
            .collect();
        Tspp::new(self.n, self.m, rows)
    }

    /// Inverse of [`to_tspp`](Self::to_tspp). Row `N - j` is read off
    /// column `j` of `b`: its border lengths are `n - b_{j+1-k, j}`.
    pub fn from_tspp(b: &Tspp) -> Result<Cspp> {
        let (n, m) = (b.n(), b.m());
        let big_n = n + m;
        let mut rows = Vec::new();
        for row in 1..big_n {
            let j = big_n - row;
            let borders: Vec<usize> = (1..=j)
                .map(|k| (n as i64 - b.get(j + 1 - k, j)) as usize)
                .collect();
            let width = borders.first().copied().unwrap_or(0);
            let entries: Vec<u8> = (1..=width)
                .map(|l| borders.iter().filter(|&&mu| mu >= l).count() as u8)
                .collect();
            if entries.is_empty() {
                break;
            }
            rows.push(entries);
        }
        Cspp::new(n, m, rows)
    }

    /// The twisted Bender-Knuth involution `tbk_r`.
    pub fn tbk(&self, r: usize) -> Result<Cspp> {
        self.check_r(r)?;
        if r == 1 {
            self.tbk1()
        } else {
            Ok(self.tbk_upper(r as u8))
        }
    }

    /// Swaps the free `r`'s and `r - 1`'s row by row. A pair `r` over
    /// `r - 1` in one column is left alone, and so is a saturated `r - 1`.
    fn tbk_upper(&self, r: u8) -> Cspp {
        let lower = r - 1;
        let sat_col = self.size() as i64 - i64::from(lower);
        let is_free = |i: usize, j: usize| -> bool {
            let v = self.get(i, j);
            if v == r {
                self.get(i + 1, j) != lower
            } else if v == lower {
                self.get(i - 1, j) != r && !(j as i64 == sat_col)
            } else {
                false
            }
        };
        let mut rows = self.rows.clone();
        for (idx, row) in rows.iter_mut().enumerate() {
            let i = idx + 1;
            let free: Vec<usize> = (1..=row.len()).filter(|&j| is_free(i, j)).collect();
            let (Some(&first), Some(&last)) = (free.first(), free.last()) else {
                continue;
            };
            debug_assert_eq!(last - first + 1, free.len(), "free block is contiguous");
            let k = free.iter().filter(|&&j| self.get(i, j) == r).count();
            let l = free.len() - k;
            for (offset, j) in (first..=last).enumerate() {
                row[j - 1] = if offset < l { r } else { lower };
            }
        }
        Cspp {
            n: self.n,
            m: self.m,
            rows,
        }
    }

    /// Changes the number of 1's in each row from `k` to `l`, where `k + l`
    /// counts the positions a 1 could occupy.
    fn tbk1(&self) -> Result<Cspp> {
        if self.m >= 2 {
            return Err(Error::domain("tbk_1", format!("needs m <= 1 (m = {})", self.m)));
        }
        let big_n = self.size();
        let lambda: Vec<usize> = (0..=big_n).map(|i| self.border(i, 2)).collect();
        let mut rows = Vec::new();
        for i in 1..big_n {
            let slots = if i == 1 {
                big_n - 1 - lambda[1]
            } else {
                lambda[i - 1] - lambda[i]
            };
            let ones = self.border(i, 1) - lambda[i];
            let mut row: Vec<u8> = self.rows.get(i - 1).map_or(Vec::new(), |r| r[..lambda[i]].to_vec());
            row.extend(std::iter::repeat_n(1, slots - ones));
            if row.is_empty() {
                break;
            }
            rows.push(row);
        }
        Cspp::new(self.n, self.m, rows)
    }

    /// Applies the factors of `which` in increasing order of index.
    pub fn apply(&self, which: CsppInvolution) -> Result<Cspp> {
        if which == CsppInvolution::GammaTilde && self.m >= 2 {
            return Err(Error::domain("gamma_tilde", format!("needs m <= 1 (m = {})", self.m)));
        }
        which
            .diagonals(self.size().saturating_sub(1))
            .try_fold(self.clone(), |c, r| c.tbk(r))
    }

    pub fn rho_tilde(&self) -> Result<Cspp> {
        self.apply(CsppInvolution::RhoTilde)
    }

    pub fn gamma_tilde(&self) -> Result<Cspp> {
        self.apply(CsppInvolution::GammaTilde)
    }

    /// One row per line; saturated parts carry a trailing `*`.
    pub fn to_ascii(&self) -> String {
        if self.rows.is_empty() {
            return "(empty)\n".to_string();
        }
        let width = self.size().to_string().len() + 1;
        let mut out = String::new();
        for (r, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(c, v)| {
                    let mark = if self.is_saturated(r + 1, c + 1) { "*" } else { "" };
                    format!("{:<width$}", format!("{v}{mark}"))
                })
                .collect();
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Cspp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

#[derive(Serialize, Deserialize)]
struct CsppJson {
    kind: String,
    n: usize,
    m: usize,
    rows: Vec<Vec<u8>>,
}

impl TryFrom<CsppJson> for Cspp {
    type Error = Error;

    fn try_from(j: CsppJson) -> Result<Self> {
        if j.kind != "cspp" {
            return Err(Error::invalid("cspp", format!("kind is {:?}", j.kind)));
        }
        Cspp::new(j.n, j.m, j.rows)
    }
}

impl From<Cspp> for CsppJson {
    fn from(c: Cspp) -> Self {
        CsppJson {
            kind: "cspp".into(),
            n: c.n,
            m: c.m,
            rows: c.rows,
        }
    }
}

/// Weakly decreasing rows of positive entries with `row[l] <= bounds[l]`,
/// nonempty, in lexicographic order.
fn rows_under(bounds: &[u8]) -> Vec<Vec<u8>> {
    fn extend(bounds: &[u8], prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let pos = prefix.len();
        if pos == bounds.len() {
            return;
        }
        let top = bounds[pos].min(prefix.last().copied().unwrap_or(u8::MAX));
        for v in 1..=top {
            prefix.push(v);
            out.push(prefix.clone());
            extend(bounds, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(bounds, &mut Vec::new(), &mut out);
    out
}

fn next_bounds(prev: &[u8]) -> Vec<u8> {
    prev.iter().take_while(|&&v| v > 1).map(|&v| v - 1).collect()
}

fn complete(rows: &mut Vec<Vec<u8>>, visit: &mut dyn FnMut(&[Vec<u8>])) {
    visit(rows);
    let bounds = next_bounds(rows.last().expect("at least one row"));
    for row in rows_under(&bounds) {
        rows.push(row);
        complete(rows, visit);
        rows.pop();
    }
}

/// All of `CSPP_{n,m}`, sorted by the row lists.
pub fn enumerate_cspp(n: usize, m: usize, opts: &EnumOptions) -> Result<Vec<Cspp>> {
    opts.check(n + m)?;
    let big_n = n + m;
    let first_bounds: Vec<u8> = (1..=n)
        .map(|j| big_n.saturating_sub(j) as u8)
        .take_while(|&b| b > 0)
        .collect();
    let firsts = rows_under(&first_bounds);
    let mut out = vec![Cspp::empty(n, m)];
    out.extend(run_shards(firsts, opts.jobs, |first| {
        let mut found = Vec::new();
        complete(&mut vec![first.clone()], &mut |rows| {
            found.push(Cspp {
                n,
                m,
                rows: rows.to_vec(),
            })
        });
        found
    }));
    Ok(out)
}

/// `CSPP_{n,m}^rho~` or `CSPP_{n,m}^gamma~`, by brute-force filtering.
pub fn invariants_of_filtered(
    n: usize,
    m: usize,
    which: CsppInvolution,
    opts: &EnumOptions,
) -> Result<Vec<Cspp>> {
    let all = enumerate_cspp(n, m, opts)?;
    let mut out = Vec::new();
    for c in all {
        if c.apply(which)? == c {
            out.push(c);
        }
    }
    Ok(out)
}

/// The same sets, obtained by carrying the flip-invariant triangular
/// partitions across the bijection. Every image is re-checked for
/// invariance, so a failure of the correspondence surfaces as an error
/// instead of a silently wrong set. Output is sorted.
pub fn invariants_of(
    n: usize,
    m: usize,
    which: CsppInvolution,
    opts: &EnumOptions,
) -> Result<Vec<Cspp>> {
    if n == 0 {
        return Ok(vec![Cspp::empty(0, m)]);
    }
    let mut out = Vec::new();
    for b in enumerate_tspp_invariant(n, m, which.on_tspp(), opts)? {
        let c = Cspp::from_tspp(&b)?;
        if c.apply(which)? != c {
            return Err(Error::Disagreement(format!(
                "image of a {which:?}-invariant triangular partition is not invariant:\n{c}"
            )));
        }
        out.push(c);
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize, rows: &[&[u8]]) -> Cspp {
        Cspp::new(n, 0, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn example_8() -> Cspp {
        c(8, &[&[6, 6, 4, 4, 3, 1, 1], &[5, 3, 3, 2, 1], &[3, 2, 2, 1], &[1, 1]])
    }

    fn example_6() -> Cspp {
        c(6, &[&[5, 3, 1, 1, 1], &[3, 2], &[2, 1]])
    }

    #[test]
    fn border_and_statistic() {
        let e = example_8();
        assert_eq!(e.border(1, 4), 4);
        assert_eq!(e.border(4, 1), 2);
        assert_eq!(Cspp::empty(3, 0).border(1, 1), 0);
        let ubar: Vec<usize> = (1..=8).map(|r| e.stat_ubar(r).unwrap()).collect();
        assert_eq!(ubar, vec![6, 4, 5, 4, 4, 5, 4, 4]);
        let one = c(2, &[&[1]]);
        assert_eq!(one.stat_ubar(1).unwrap(), 1);
        assert_eq!(one.stat_ubar(2).unwrap(), 1);
        assert!(one.stat_ubar(3).is_err());
    }

    #[test]
    fn bijection_on_worked_example() {
        let b = example_8().to_tspp().unwrap();
        assert_eq!(
            b.rows(),
            vec![
                vec![8, 8, 8, 8, 8, 8, 8],
                vec![8, 8, 8, 8, 7, 6],
                vec![8, 8, 7, 7, 6],
                vec![6, 5, 5, 4],
                vec![4, 4, 3],
                vec![3, 3],
                vec![1],
            ]
        );
        assert_eq!(Cspp::from_tspp(&b).unwrap(), example_8());
    }

    #[test]
    fn bijection_small_cases() {
        // The empty array goes to the all-n partition, [1] in CSPP_2 to b_11 = 1.
        assert_eq!(Cspp::empty(2, 0).to_tspp().unwrap().rows(), vec![vec![2]]);
        assert_eq!(c(2, &[&[1]]).to_tspp().unwrap().rows(), vec![vec![1]]);
        let all_n = Cspp::empty(4, 0).to_tspp().unwrap();
        assert!(all_n.rows().iter().flatten().all(|&v| v == 4));
    }

    #[test]
    fn tbk_worked_examples() {
        let e = example_6();
        assert_eq!(
            e.tbk(2).unwrap().rows(),
            &[vec![5, 3, 2, 2, 1], vec![3, 2], vec![1, 1]]
        );
        assert_eq!(
            e.tbk(1).unwrap().rows(),
            &[vec![5, 3], vec![3, 2], vec![2], vec![1]]
        );
        assert_eq!(e.tbk(6).unwrap(), e);
    }

    #[test]
    fn displayed_invariant_elements() {
        let rho = c(8, &[&[7, 4, 4, 3, 2, 1, 1], &[6, 3, 2, 1], &[5, 2], &[2, 1], &[1]]);
        assert_eq!(rho.rho_tilde().unwrap(), rho);
        let gamma = c(7, &[&[5, 5, 3, 2, 1], &[4, 4, 1], &[3, 3], &[2, 2], &[1]]);
        assert_eq!(gamma.gamma_tilde().unwrap(), gamma);
        assert_eq!(Cspp::empty(5, 0).rho_tilde().unwrap(), Cspp::empty(5, 0));
    }

    #[test]
    fn catalogs() {
        let opts = EnumOptions::default();
        let counts: Vec<usize> = (1..=6)
            .map(|n| invariants_of_filtered(n, 0, CsppInvolution::RhoTilde, &opts).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 3, 10, 25, 140]);
        let g3 = invariants_of_filtered(3, 0, CsppInvolution::GammaTilde, &opts).unwrap();
        assert_eq!(g3, vec![c(3, &[&[1]])]);
        let g5 = invariants_of_filtered(5, 0, CsppInvolution::GammaTilde, &opts).unwrap();
        let mut want = vec![
            c(5, &[&[1, 1]]),
            c(5, &[&[3, 2, 1], &[1]]),
            c(5, &[&[3, 3, 1], &[2, 2], &[1]]),
        ];
        want.sort();
        assert_eq!(g5, want);
    }

    #[test]
    fn enumeration() {
        let opts = EnumOptions::default();
        let two = enumerate_cspp(2, 0, &opts).unwrap();
        assert_eq!(two, vec![Cspp::empty(2, 0), c(2, &[&[1]])]);
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_cspp(n, 0, &opts).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 42, 429, 7436]);
        let all = enumerate_cspp(4, 2, &opts).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all, enumerate_cspp(4, 2, &opts.with_jobs(3)).unwrap());
        assert_eq!(enumerate_cspp(0, 3, &opts).unwrap(), vec![Cspp::empty(0, 3)]);
    }

    #[test]
    fn invariants_via_triangular_partitions_match_filter() {
        let opts = EnumOptions::default();
        for n in 1..=6 {
            for m in 0..=1 {
                if n + m > 6 {
                    continue;
                }
                for which in [CsppInvolution::RhoTilde, CsppInvolution::GammaTilde] {
                    assert_eq!(
                        invariants_of(n, m, which, &opts).unwrap(),
                        invariants_of_filtered(n, m, which, &opts).unwrap(),
                        "n={n} m={m} {which:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn bijection_intertwines_flips_and_statistics() {
        let opts = EnumOptions::default();
        for (n, m) in [(1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (6, 0), (2, 1), (3, 1), (4, 1), (5, 1), (2, 2), (3, 3)] {
            let big_n = n + m;
            for c in enumerate_cspp(n, m, &opts).unwrap() {
                let b = c.to_tspp().unwrap();
                assert_eq!(Cspp::from_tspp(&b).unwrap(), c);
                for r in 1..=big_n {
                    assert_eq!(c.stat_ubar(r).unwrap(), b.stat_ubar(r).unwrap(), "{c}");
                }
                for r in 1..big_n {
                    if r == 1 && m >= 2 {
                        continue;
                    }
                    assert_eq!(c.tbk(r).unwrap().to_tspp().unwrap(), b.pi(r).unwrap(), "r={r}\n{c}");
                }
            }
        }
    }

    #[test]
    fn validation() {
        assert!(Cspp::new(3, 0, vec![vec![3]]).is_err());
        assert!(Cspp::new(3, 0, vec![vec![1, 1, 1]]).is_err());
        assert!(Cspp::new(4, 0, vec![vec![2], vec![2]]).is_err());
        assert!(Cspp::new(4, 0, vec![vec![1, 2]]).is_err());
        assert!(Cspp::new(4, 0, vec![vec![2], vec![1, 1]]).is_err());
        assert!(Cspp::new(4, 0, vec![vec![]]).is_err());
        assert!(Cspp::new(0, 2, vec![vec![1]]).is_err());
    }

    #[test]
    fn ascii_marks_saturated_parts() {
        let s = c(2, &[&[1]]).to_ascii();
        assert_eq!(s, "1*\n");
        assert!(example_8().to_ascii().starts_with("6  6* 4  4* 3* 1  1*"));
    }

    #[test]
    fn json_round_trip() {
        let e = example_6();
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"{"kind":"cspp","n":6,"m":0,"rows":[[5,3,1,1,1],[3,2],[2,1]]}"#);
        assert_eq!(serde_json::from_str::<Cspp>(&s).unwrap(), e);
    }
}
