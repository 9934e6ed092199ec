//! Pairs of column-strict plane partitions, the images of domino tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cspp::{enumerate_cspp, Cspp};
use crate::enumerate::EnumOptions;
use crate::error::{Error, Result};
use crate::exact::TPoly;
use crate::partition::{is_horizontal_strip, is_vertical_strip};

use super::{enumerate_domino, phi, DominoClass, DominoTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    /// No condition between the shapes.
    Pcspp,
    /// `shape(c1) / shape(c0)` is a horizontal strip.
    Hpcspp,
    /// `shape(c0) / shape(c1)` is a vertical strip.
    Vpcspp,
}

impl PairKind {
    pub fn name(self) -> &'static str {
        match self {
            PairKind::Pcspp => "pcspp",
            PairKind::Hpcspp => "hpcspp",
            PairKind::Vpcspp => "vpcspp",
        }
    }
}

/// `((n0, m0), (n1, m1))` for the two halves of a pair over `(n, m)`.
pub fn pair_parameters(n: usize, m: usize) -> ((usize, usize), (usize, usize)) {
    let big = n + m + 1;
    let (n0, n1) = (n.div_ceil(2), n / 2);
    ((n0, big.div_ceil(2) - n0), (n1, big / 2 - n1))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PairedJson", into = "PairedJson")]
pub struct PairedPP {
    kind: PairKind,
    n: usize,
    m: usize,
    c0: Cspp,
    c1: Cspp,
}

impl PairedPP {
    pub fn new(kind: PairKind, n: usize, m: usize, c0: Cspp, c1: Cspp) -> Result<Self> {
        let ((n0, m0), (n1, m1)) = pair_parameters(n, m);
        if (c0.n(), c0.m(), c1.n(), c1.m()) != (n0, m0, n1, m1) {
            return Err(Error::invalid(
                kind.name(),
                format!("halves must lie in CSPP_({n0},{m0}) and CSPP_({n1},{m1})"),
            ));
        }
        let (s0, s1) = (c0.shape(), c1.shape());
        let ok = match kind {
            PairKind::Pcspp => true,
            PairKind::Hpcspp => s0.contained_in(&s1) && is_horizontal_strip(&s0, &s1)?,
            PairKind::Vpcspp => s1.contained_in(&s0) && is_vertical_strip(&s1, &s0)?,
        };
        if !ok {
            return Err(Error::invalid(kind.name(), format!("shapes {s0} and {s1} do not differ by the required strip")));
        }
        Ok(PairedPP { kind, n, m, c0, c1 })
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn c0(&self) -> &Cspp {
        &self.c0
    }

    pub fn c1(&self) -> &Cspp {
        &self.c1
    }

    pub fn stat_ubar(&self, r: usize) -> usize {
        self.c0.ubar(r) + self.c1.ubar(r)
    }

    pub fn to_ascii(&self) -> String {
        format!("c0:\n{}c1:\n{}", self.c0.to_ascii(), self.c1.to_ascii())
    }
}

impl fmt::Display for PairedPP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

#[derive(Serialize, Deserialize)]
struct PairedJson {
    kind: String,
    class: PairKind,
    n: usize,
    m: usize,
    c0: Cspp,
    c1: Cspp,
}

impl TryFrom<PairedJson> for PairedPP {
    type Error = Error;

    fn try_from(j: PairedJson) -> Result<Self> {
        if j.kind != "paired" {
            return Err(Error::invalid("paired", format!("kind is {:?}", j.kind)));
        }
        PairedPP::new(j.class, j.n, j.m, j.c0, j.c1)
    }
}

impl From<PairedPP> for PairedJson {
    fn from(p: PairedPP) -> Self {
        PairedJson {
            kind: "paired".into(),
            class: p.kind,
            n: p.n,
            m: p.m,
            c0: p.c0,
            c1: p.c1,
        }
    }
}

/// All pairs of the given kind over `(n, m)`, sorted.
pub fn enumerate_paired(kind: PairKind, n: usize, m: usize, opts: &EnumOptions) -> Result<Vec<PairedPP>> {
    opts.check(n + m)?;
    let ((n0, m0), (n1, m1)) = pair_parameters(n, m);
    let first = enumerate_cspp(n0, m0, opts)?;
    let second = enumerate_cspp(n1, m1, opts)?;
    let mut out = Vec::new();
    for c0 in &first {
        for c1 in &second {
            if let Ok(p) = PairedPP::new(kind, n, m, c0.clone(), c1.clone()) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// The three equivalences between parity of the rows or columns of `d`
/// and strip conditions on the shapes of its image pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StripReport {
    pub rows_even: bool,
    pub columns_even: bool,
    /// `shape(c0) <= shape(c1)` with a horizontal strip between them.
    pub horizontal_strip: bool,
    /// `shape(c1) <= shape(c0)` with a vertical strip between them.
    pub vertical_strip: bool,
    pub equal_shapes: bool,
}

impl StripReport {
    pub fn clause_rows(&self) -> bool {
        self.rows_even == self.horizontal_strip
    }

    pub fn clause_columns(&self) -> bool {
        self.columns_even == self.vertical_strip
    }

    pub fn clause_both(&self) -> bool {
        (self.rows_even && self.columns_even) == self.equal_shapes
    }

    pub fn holds(&self) -> bool {
        self.clause_rows() && self.clause_columns() && self.clause_both()
    }
}

pub fn check_strip_characterization(d: &DominoTableau) -> Result<StripReport> {
    let p = phi(&d.with_class(DominoClass::Dpp)?)?;
    let shape = d.shape();
    let (s0, s1) = (p.c0().shape(), p.c1().shape());
    Ok(StripReport {
        rows_even: shape.is_even(),
        columns_even: shape.conjugate().is_even(),
        horizontal_strip: s0.contained_in(&s1) && is_horizontal_strip(&s0, &s1)?,
        vertical_strip: s1.contained_in(&s0) && is_vertical_strip(&s1, &s0)?,
        equal_shapes: s0 == s1,
    })
}

/// Sizes and `Ubar_1` distributions of the twisted class and CDPP side by
/// side. Equality is a finding, never an assertion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcsppCdppComparison {
    pub n: usize,
    pub m: usize,
    pub gcspp_count: usize,
    pub cdpp_count: usize,
    pub gcspp_ubar1: TPoly,
    pub cdpp_ubar1: TPoly,
}

impl GcsppCdppComparison {
    pub fn counts_equal(&self) -> bool {
        self.gcspp_count == self.cdpp_count
    }

    pub fn distributions_equal(&self) -> bool {
        self.gcspp_ubar1 == self.cdpp_ubar1
    }
}

pub fn compare_gcspp_cdpp(n: usize, m: usize, opts: &EnumOptions) -> Result<GcsppCdppComparison> {
    let g = enumerate_domino(DominoClass::Gcspp, n, m, opts)?;
    let c = enumerate_domino(DominoClass::Cdpp, n, m, opts)?;
    Ok(GcsppCdppComparison {
        n,
        m,
        gcspp_count: g.len(),
        cdpp_count: c.len(),
        gcspp_ubar1: TPoly::distribution(g.iter().map(|d| d.stat_ubar(1))),
        cdpp_ubar1: TPoly::distribution(c.iter().map(|d| d.stat_ubar(1))),
    })
}
