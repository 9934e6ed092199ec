//! The maps relating domino tableaux to column-strict plane partitions.
//!
//! `theta` halves a `rho~`-invariant partition into a twisted domino
//! tableau, `delta` does the same for a `gamma~`-invariant one after
//! dropping its 1's, and `phi` splits a domino tableau into a pair of
//! column-strict partitions along the 2-quotients of its shapes.

use crate::cspp::{Cspp, CsppInvolution};
use crate::error::{Error, Result};
use crate::partition::Partition;

use super::paired::{pair_parameters, PairKind, PairedPP};
use super::{DominoClass, DominoTableau, TileKind};

/// Grid of a domino tableau with each part `r` replaced by a pair of values:
/// a vertical domino becomes `hi(r)` over `lo(r)`, a row of `k` horizontal
/// dominoes becomes `k` copies of `hi(r)` then `k` of `lo(r)`, and a single
/// becomes `lo(r)`.
fn unfold(d: &DominoTableau, hi: impl Fn(u8) -> u8, lo: impl Fn(u8) -> u8) -> Vec<Vec<u8>> {
    let mut grid = d.grid();
    for t in d.tiles() {
        match t.kind {
            TileKind::Vertical => {
                grid[t.i - 1][t.j - 1] = hi(t.v);
                grid[t.i][t.j - 1] = lo(t.v);
            }
            TileKind::Single => grid[t.i - 1][t.j - 1] = lo(t.v),
            TileKind::Horizontal => {}
        }
    }
    for (r, row) in grid.iter_mut().enumerate() {
        let i = r + 1;
        let mut values: Vec<u8> = d
            .tiles()
            .iter()
            .filter(|t| t.i == i && t.kind == TileKind::Horizontal)
            .map(|t| t.v)
            .collect();
        values.dedup();
        for v in values {
            let mut run: Vec<usize> = d
                .tiles()
                .iter()
                .filter(|t| t.i == i && t.kind == TileKind::Horizontal && t.v == v)
                .flat_map(|t| [t.j, t.j + 1])
                .collect();
            run.sort_unstable();
            let half = run.len() / 2;
            for (k, j) in run.into_iter().enumerate() {
                row[j - 1] = if k < half { hi(v) } else { lo(v) };
            }
        }
    }
    grid
}

fn require_invariant(c: &Cspp, which: CsppInvolution, map: &'static str) -> Result<()> {
    if c.apply(which)? != *c {
        return Err(Error::domain(map, format!("input is not {which:?}-invariant")));
    }
    Ok(())
}

/// Twisted domino tableau of a `rho~`-invariant `c`: paired `2r` over
/// `2r - 1` become a vertical `r`, free ones in a row become horizontal
/// `r`'s, and a saturated `2r - 1` becomes a single `r`.
pub fn theta(c: &Cspp) -> Result<DominoTableau> {
    require_invariant(c, CsppInvolution::RhoTilde, "theta")?;
    let grid: Vec<Vec<u8>> = c
        .rows()
        .iter()
        .map(|row| row.iter().map(|&v| v.div_ceil(2)).collect())
        .collect();
    DominoTableau::from_grid(DominoClass::Gcspp, c.n(), c.m(), &grid)
}

pub fn theta_inverse(d: &DominoTableau) -> Result<Cspp> {
    let d = d.with_class(DominoClass::Gcspp)?;
    let grid = unfold(&d, |r| 2 * r, |r| 2 * r - 1);
    let c = Cspp::new(d.n(), d.m(), grid)?;
    if c.rho_tilde()? != c {
        return Err(Error::Disagreement(format!("theta inverse gave a non-invariant partition:\n{c}")));
    }
    Ok(c)
}

/// Domino tableau of a `gamma~`-invariant `c` over `(2n + 1, 0)`: drop the
/// 1's, then paired or free `2r + 1` and `2r` become dominoes `r`. The
/// result has no single squares and lies in `RDPP_{2n-1}`.
pub fn delta(c: &Cspp) -> Result<DominoTableau> {
    if c.m() != 0 || c.n() < 3 || c.n().is_multiple_of(2) {
        return Err(Error::domain("delta", format!("needs (n, m) = (2k+1, 0) with k >= 1, got ({}, {})", c.n(), c.m())));
    }
    require_invariant(c, CsppInvolution::GammaTilde, "delta")?;
    let grid: Vec<Vec<u8>> = c
        .rows()
        .iter()
        .map(|row| row.iter().filter(|&&v| v >= 2).map(|&v| v / 2).collect::<Vec<u8>>())
        .filter(|row| !row.is_empty())
        .collect();
    DominoTableau::from_grid(DominoClass::Rdpp, c.n() - 2, 0, &grid)
}

pub fn delta_inverse(d: &DominoTableau) -> Result<Cspp> {
    if d.m() != 0 {
        return Err(Error::domain("delta inverse", "needs m = 0"));
    }
    let d = d.with_class(DominoClass::Rdpp)?;
    let big_n = d.n() + 2;
    let upper = unfold(&d, |r| 2 * r + 1, |r| 2 * r);
    let len = |i: usize| if i == 0 { big_n - 1 } else { upper.get(i - 1).map_or(0, Vec::len) };
    let mut rows = Vec::new();
    for i in 1..big_n {
        let slots = len(i - 1) - len(i);
        if slots % 2 == 1 {
            return Err(Error::domain("delta inverse", format!("row {i} has an odd number of slots for 1's")));
        }
        let mut row = upper.get(i - 1).cloned().unwrap_or_default();
        row.extend(std::iter::repeat_n(1, slots / 2));
        if row.is_empty() {
            break;
        }
        rows.push(row);
    }
    let c = Cspp::new(big_n, 0, rows)?;
    if c.gamma_tilde()? != c {
        return Err(Error::Disagreement(format!("delta inverse gave a non-invariant partition:\n{c}")));
    }
    Ok(c)
}

/// Fills a partition with `max { v : cell in shapes[v - 1] }`.
fn fill_chain(shapes: &[Partition]) -> Vec<Vec<u8>> {
    let Some(outer) = shapes.first() else {
        return Vec::new();
    };
    outer
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| {
            (1..=len)
                .map(|j| shapes.iter().rposition(|s| s.part(r + 1) >= j).map_or(0, |p| p as u8 + 1))
                .collect()
        })
        .collect()
}

/// The pair `(c0, c1)` whose shapes at each threshold `v` form the
/// 2-quotient of the shape of `d_{>=v}`.
pub fn phi(d: &DominoTableau) -> Result<PairedPP> {
    let kind = match d.class() {
        DominoClass::Gcspp => {
            if d.tiles().iter().any(|t| t.kind == TileKind::Single) {
                return Err(Error::domain("phi", "tableau has a single square"));
            }
            PairKind::Pcspp
        }
        DominoClass::Dpp => PairKind::Pcspp,
        DominoClass::Rdpp => PairKind::Hpcspp,
        DominoClass::Cdpp => PairKind::Vpcspp,
    };
    let grid = d.grid();
    let top = grid.iter().flatten().copied().max().unwrap_or(0);
    let mut q0 = Vec::new();
    let mut q1 = Vec::new();
    for v in 1..=top {
        let rows: Vec<usize> = grid
            .iter()
            .map(|row| row.iter().take_while(|&&x| x >= v).count())
            .take_while(|&l| l > 0)
            .collect();
        let (a, b) = Partition::new(rows)?.two_quotient();
        q0.push(a);
        q1.push(b);
    }
    let ((n0, m0), (n1, m1)) = pair_parameters(d.n(), d.m());
    let c0 = Cspp::new(n0, m0, fill_chain(&q0))?;
    let c1 = Cspp::new(n1, m1, fill_chain(&q1))?;
    PairedPP::new(kind, d.n(), d.m(), c0, c1)
}

pub fn phi_inverse(p: &PairedPP) -> Result<DominoTableau> {
    let class = match p.kind() {
        PairKind::Pcspp => DominoClass::Dpp,
        PairKind::Hpcspp => DominoClass::Rdpp,
        PairKind::Vpcspp => DominoClass::Cdpp,
    };
    let top = p.c0().max_entry().max(p.c1().max_entry());
    let shapes: Vec<Partition> = (1..=top)
        .map(|v| Partition::from_two_quotient(&p.c0().shape_at_least(v), &p.c1().shape_at_least(v)))
        .collect();
    DominoTableau::from_grid(class, p.n(), p.m(), &fill_chain(&shapes))
}

#[cfg(test)]
mod tests {
    use super::super::{enumerate_domino, Tile};
    use super::*;
    use crate::cspp::{enumerate_cspp, invariants_of};
    use crate::enumerate::EnumOptions;
    use TileKind::{Horizontal as H, Single as S, Vertical as V};

    fn cspp(n: usize, rows: &[&[u8]]) -> Cspp {
        Cspp::new(n, 0, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn t(i: usize, j: usize, kind: TileKind, v: u8) -> Tile {
        Tile::new(i, j, kind, v)
    }

    fn worked_domino() -> DominoTableau {
        DominoTableau::new(
            DominoClass::Rdpp,
            9,
            0,
            vec![
                t(1, 1, H, 3),
                t(1, 3, H, 3),
                t(1, 5, H, 1),
                t(2, 1, V, 2),
                t(2, 2, H, 2),
                t(2, 4, V, 1),
                t(3, 2, H, 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn theta_worked_example() {
        let c = cspp(8, &[&[7, 4, 4, 3, 2, 1, 1], &[6, 3, 2, 1], &[5, 2], &[2, 1], &[1]]);
        let d = theta(&c).unwrap();
        let want = DominoTableau::new(
            DominoClass::Gcspp,
            8,
            0,
            vec![
                t(1, 1, S, 4),
                t(1, 2, V, 2),
                t(1, 3, H, 2),
                t(1, 5, H, 1),
                t(1, 7, S, 1),
                t(2, 1, V, 3),
                t(2, 3, H, 1),
                t(3, 2, V, 1),
                t(4, 1, V, 1),
            ],
        )
        .unwrap();
        assert_eq!(d, want);
        assert_eq!(theta_inverse(&d).unwrap(), c);
        assert!(theta(&Cspp::empty(4, 0)).unwrap().is_empty());
    }

    #[test]
    fn theta_rejects_non_invariant() {
        let c = cspp(4, &[&[1]]);
        assert!(c.rho_tilde().unwrap() != c);
        assert!(matches!(theta(&c), Err(Error::Domain { .. })));
    }

    #[test]
    fn delta_worked_example() {
        let c = cspp(11, &[&[7, 7, 6, 6, 3, 2, 1, 1], &[5, 5, 4, 3, 1], &[4, 3, 2, 2], &[1, 1]]);
        let d = delta(&c).unwrap();
        assert_eq!(d, worked_domino());
        assert_eq!(delta_inverse(&d).unwrap(), c);
        assert_eq!(d.stat_ubar(1), c.stat_ubar(2).unwrap());
        let one = cspp(3, &[&[1]]);
        assert_eq!(delta(&one).unwrap(), DominoTableau::empty(DominoClass::Rdpp, 1, 0));
        assert_eq!(delta_inverse(&DominoTableau::empty(DominoClass::Rdpp, 1, 0)).unwrap(), one);
    }

    #[test]
    fn delta_is_a_bijection_onto_rdpp() {
        let opts = EnumOptions::default();
        for k in 1..=3 {
            let source = invariants_of(2 * k + 1, 0, CsppInvolution::GammaTilde, &opts).unwrap();
            let mut image: Vec<DominoTableau> = source.iter().map(|c| delta(c).unwrap()).collect();
            for (c, d) in source.iter().zip(&image) {
                assert_eq!(&delta_inverse(d).unwrap(), c);
                assert_eq!(d.stat_ubar(1), c.stat_ubar(2).unwrap());
            }
            image.sort();
            assert_eq!(image, enumerate_domino(DominoClass::Rdpp, 2 * k - 1, 0, &opts).unwrap());
        }
    }

    #[test]
    fn phi_worked_example() {
        let p = phi(&worked_domino()).unwrap();
        assert_eq!(p.c0().rows(), &[vec![1, 1]]);
        assert_eq!(p.c1().rows(), &[vec![3, 3, 1], vec![2, 2]]);
        assert_eq!(p.kind(), PairKind::Hpcspp);
        assert_eq!(phi_inverse(&p).unwrap(), worked_domino());
        let empty = phi(&DominoTableau::empty(DominoClass::Dpp, 4, 0)).unwrap();
        assert!(empty.c0().is_empty() && empty.c1().is_empty());
    }

    #[test]
    fn phi_round_trips_on_dpp_and_keeps_statistics() {
        let opts = EnumOptions::default();
        for (n, m) in [(4, 0), (5, 0), (3, 2), (4, 1)] {
            for d in enumerate_domino(DominoClass::Dpp, n, m, &opts).unwrap() {
                let p = phi(&d).unwrap();
                assert_eq!(phi_inverse(&p).unwrap(), d);
                let shape = d.shape().two_quotient();
                assert_eq!((p.c0().shape(), p.c1().shape()), shape);
                for r in 1..=n + m {
                    assert_eq!(p.stat_ubar(r), d.stat_ubar(r), "r={r}\n{d}");
                }
            }
        }
    }

    #[test]
    fn theta_is_a_bijection_onto_gcspp() {
        let opts = EnumOptions::default();
        for (n, m) in [(4, 0), (5, 0), (6, 0), (3, 2), (4, 1)] {
            let all = enumerate_cspp(n, m, &opts).unwrap();
            let mut image = Vec::new();
            for c in all.iter().filter(|c| c.rho_tilde().unwrap() == **c) {
                let d = theta(c).unwrap_or_else(|e| panic!("n={n} m={m} {e}\n{c}"));
                assert_eq!(&theta_inverse(&d).unwrap(), c);
                image.push(d);
            }
            image.sort();
            assert_eq!(image, enumerate_domino(DominoClass::Gcspp, n, m, &opts).unwrap());
        }
    }
}
