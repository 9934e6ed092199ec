//! Domino plane partitions: the twisted class GCSPP, the restricted classes
//! DPP, RDPP and CDPP, their enumeration and the statistic `Ubar_r`.
//!
//! A tableau is stored as a list of tiles. Within one value the cells form a
//! skew shape `lambda / mu` with at most two cells per column, and the
//! tiling of that skew shape is forced: two stacked cells are a vertical
//! domino and each remaining row run is cut into horizontal dominoes from
//! the left, with a single square allowed only where the twisted class
//! permits one. Construction from a grid of values relies on this.

mod maps;
mod paired;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumerate::{run_shards, EnumOptions};
use crate::error::{Error, Result};
use crate::exact::TPoly;
use crate::partition::Partition;

pub use maps::{delta, delta_inverse, phi, phi_inverse, theta, theta_inverse};
pub use paired::{
    check_strip_characterization, compare_gcspp_cdpp, enumerate_paired, pair_parameters,
    GcsppCdppComparison, PairKind, PairedPP, StripReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TileKind {
    #[serde(rename = "S")]
    Single,
    #[serde(rename = "H")]
    Horizontal,
    #[serde(rename = "V")]
    Vertical,
}

/// A square or domino anchored at its top-left cell `(i, j)`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tile {
    pub i: usize,
    pub j: usize,
    pub kind: TileKind,
    pub v: u8,
}

impl Tile {
    pub fn new(i: usize, j: usize, kind: TileKind, v: u8) -> Self {
        Tile { i, j, kind, v }
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        match self.kind {
            TileKind::Single => vec![(self.i, self.j)],
            TileKind::Horizontal => vec![(self.i, self.j), (self.i, self.j + 1)],
            TileKind::Vertical => vec![(self.i, self.j), (self.i + 1, self.j)],
        }
    }

    pub fn last_column(&self) -> usize {
        match self.kind {
            TileKind::Horizontal => self.j + 1,
            _ => self.j,
        }
    }

    fn columns(&self) -> std::ops::RangeInclusive<usize> {
        self.j..=self.last_column()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominoClass {
    /// Twisted: single squares allowed at the saturated positions of row 1.
    Gcspp,
    Dpp,
    /// DPP with every row of even length.
    Rdpp,
    /// DPP with every column of even length.
    Cdpp,
}

impl DominoClass {
    pub fn name(self) -> &'static str {
        match self {
            DominoClass::Gcspp => "gcspp",
            DominoClass::Dpp => "dpp",
            DominoClass::Rdpp => "rdpp",
            DominoClass::Cdpp => "cdpp",
        }
    }

    fn allows_singles(self) -> bool {
        self == DominoClass::Gcspp
    }
}

/// `ceil((n + m - j) / 2)`.
pub fn domino_cap(big_n: usize, j: usize) -> i64 {
    (big_n as i64 - j as i64 + 1).div_euclid(2)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DominoJson", into = "DominoJson")]
pub struct DominoTableau {
    class: DominoClass,
    n: usize,
    m: usize,
    tiles: Vec<Tile>,
}

impl DominoTableau {
    /// Validates against the axioms of `class`. Tiles may come in any order.
    pub fn new(class: DominoClass, n: usize, m: usize, mut tiles: Vec<Tile>) -> Result<Self> {
        tiles.sort();
        let d = DominoTableau { class, n, m, tiles };
        d.validate()?;
        Ok(d)
    }

    pub fn empty(class: DominoClass, n: usize, m: usize) -> Self {
        DominoTableau {
            class,
            n,
            m,
            tiles: Vec::new(),
        }
    }

    /// Tiles the value grid (rows of a plane partition) by the forced
    /// tiling and validates the result.
    pub fn from_grid(class: DominoClass, n: usize, m: usize, grid: &[Vec<u8>]) -> Result<Self> {
        let fail = |reason: String| Err(Error::invalid(class.name(), reason));
        for (r, row) in grid.iter().enumerate() {
            if row.is_empty() || row.contains(&0) {
                return fail(format!("row {} of the grid is empty or has a zero", r + 1));
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return fail(format!("row {} increases", r + 1));
            }
        }
        let big_n = n + m;
        let top = grid.iter().flatten().copied().max().unwrap_or(0);
        let shape_at_least = |v: u8| -> Vec<usize> {
            grid.iter()
                .map(|row| row.iter().take_while(|&&x| x >= v).count())
                .take_while(|&l| l > 0)
                .collect()
        };
        let mut tiles = Vec::new();
        for v in (1..=top).rev() {
            let lambda = shape_at_least(v);
            let mu = shape_at_least(v + 1);
            if lambda.windows(2).any(|w| w[0] < w[1]) {
                return fail(format!("cells with value >= {v} do not form a partition"));
            }
            if let Err(reason) = tile_layer(class, big_n, v, &mu, &lambda, &mut tiles) {
                return fail(reason);
            }
        }
        DominoTableau::new(class, n, m, tiles)
    }

    pub fn class(&self) -> DominoClass {
        self.class
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.n + self.m
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn cap(&self, j: usize) -> i64 {
        domino_cap(self.size(), j)
    }

    /// The same tableau checked against another class.
    pub fn with_class(&self, class: DominoClass) -> Result<Self> {
        DominoTableau::new(class, self.n, self.m, self.tiles.clone())
    }

    fn cell_map(&self) -> Result<Vec<Vec<Option<usize>>>> {
        let fail = |reason: String| Err(Error::invalid(self.class.name(), reason));
        let mut grid: Vec<Vec<Option<usize>>> = Vec::new();
        for (idx, t) in self.tiles.iter().enumerate() {
            if t.i == 0 || t.j == 0 || t.v == 0 {
                return fail(format!("tile {t:?} has a zero index or value"));
            }
            for (i, j) in t.cells() {
                if grid.len() < i {
                    grid.resize(i, Vec::new());
                }
                let row = &mut grid[i - 1];
                if row.len() < j {
                    row.resize(j, None);
                }
                if row[j - 1].is_some() {
                    return fail(format!("tiles overlap at ({i},{j})"));
                }
                row[j - 1] = Some(idx);
            }
        }
        for (r, row) in grid.iter().enumerate() {
            if row.is_empty() || row.iter().any(Option::is_none) {
                return fail(format!("row {} is not a left-justified run of cells", r + 1));
            }
            if r > 0 && row.len() > grid[r - 1].len() {
                return fail(format!("row {} is longer than the row above", r + 1));
            }
        }
        Ok(grid)
    }

    /// Row and column rules on the cell grid plus the class axioms.
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| Err(Error::invalid(self.class.name(), reason));
        let ids = self.cell_map()?;
        let value = |i: usize, j: usize| self.tiles[ids[i][j].expect("filled")].v;
        for (r, row) in ids.iter().enumerate() {
            for c in 0..row.len() {
                if c + 1 < row.len() && value(r, c) < value(r, c + 1) {
                    return fail(format!("row {} increases at column {}", r + 1, c + 2));
                }
                if r + 1 < ids.len() && c < ids[r + 1].len() {
                    let same_tile = ids[r][c] == ids[r + 1][c];
                    if !same_tile && value(r, c) <= value(r + 1, c) {
                        return fail(format!("column {} is not strict at row {}", c + 1, r + 2));
                    }
                }
            }
        }
        let big_n = self.size();
        let odd = |j: usize| (big_n as i64 - j as i64).rem_euclid(2) == 1;
        for t in &self.tiles {
            if t.last_column() > self.n {
                return fail(format!("tile {t:?} lies beyond column n = {}", self.n));
            }
            if i64::from(t.v) > self.cap(t.last_column()) {
                return fail(format!("tile {t:?} exceeds its column cap"));
            }
            match (t.kind, self.class) {
                (TileKind::Single, DominoClass::Gcspp) => {
                    if t.i != 1 || !odd(t.j) || i64::from(t.v) != self.cap(t.j) {
                        return fail(format!("single {t:?} is not at a saturated position"));
                    }
                }
                (TileKind::Single, _) => {
                    return fail(format!("single square {t:?} in a domino plane partition"));
                }
                (_, DominoClass::Gcspp) => {
                    if let Some(j) = t.columns().find(|&j| odd(j) && i64::from(t.v) == self.cap(j)) {
                        return fail(format!("domino {t:?} takes the cap of column {j}, which needs a single"));
                    }
                }
                _ => {}
            }
        }
        let shape = self.shape();
        match self.class {
            DominoClass::Rdpp if !shape.is_even() => fail(format!("shape {shape} has a row of odd length")),
            DominoClass::Cdpp if !shape.conjugate().is_even() => {
                fail(format!("shape {shape} has a column of odd length"))
            }
            _ => Ok(()),
        }
    }

    pub fn shape(&self) -> Partition {
        let mut rows: Vec<usize> = Vec::new();
        for t in &self.tiles {
            for (i, j) in t.cells() {
                if rows.len() < i {
                    rows.resize(i, 0);
                }
                rows[i - 1] = rows[i - 1].max(j);
            }
        }
        Partition::new(rows).expect("validated tableau has a partition shape")
    }

    /// Values cell by cell, as rows.
    pub fn grid(&self) -> Vec<Vec<u8>> {
        let shape = self.shape();
        let mut grid: Vec<Vec<u8>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
        for t in &self.tiles {
            for (i, j) in t.cells() {
                grid[i - 1][j - 1] = t.v;
            }
        }
        grid
    }

    /// Twisted class: exactly the singles. Otherwise: the value equals the
    /// cap of a column the tile meets, which is the cap of its last column.
    pub fn is_saturated(&self, t: &Tile) -> bool {
        match self.class {
            DominoClass::Gcspp => t.kind == TileKind::Single,
            _ => i64::from(t.v) == self.cap(t.last_column()),
        }
    }

    /// Parts equal to `r` plus saturated parts below `r`, one count per tile.
    pub fn stat_ubar(&self, r: usize) -> usize {
        self.tiles
            .iter()
            .filter(|t| {
                let v = usize::from(t.v);
                v == r || (v < r && self.is_saturated(t))
            })
            .count()
    }

    /// Box drawing of the tiles; saturated parts carry a `*`.
    pub fn to_ascii(&self) -> String {
        if self.tiles.is_empty() {
            return "(empty)\n".to_string();
        }
        let ids = self.cell_map().expect("validated tableau");
        let rows = ids.len();
        let cols = ids[0].len();
        let at = |r: i64, c: i64| -> Option<usize> {
            if r < 0 || c < 0 {
                return None;
            }
            ids.get(r as usize).and_then(|row| row.get(c as usize)).copied().flatten()
        };
        let mut canvas = vec![vec![' '; 4 * cols + 1]; 2 * rows + 1];
        for r in 0..rows {
            for c in 0..ids[r].len() {
                let (ri, ci) = (r as i64, c as i64);
                let me = at(ri, ci);
                let (y, x) = (2 * r + 1, 4 * c);
                if at(ri - 1, ci) != me {
                    canvas[y - 1][x + 1..x + 4].fill('-');
                }
                if at(ri + 1, ci) != me {
                    canvas[y + 1][x + 1..x + 4].fill('-');
                }
                if at(ri, ci - 1) != me {
                    canvas[y][x] = '|';
                }
                if at(ri, ci + 1) != me {
                    canvas[y][x + 4] = '|';
                }
            }
        }
        for y in (0..canvas.len()).step_by(2) {
            for x in (0..canvas[y].len()).step_by(4) {
                let dash = |dx: i64| {
                    let xx = x as i64 + dx;
                    xx >= 0 && canvas[y].get(xx as usize) == Some(&'-')
                };
                let bar = |dy: i64| {
                    let yy = y as i64 + dy;
                    yy >= 0 && canvas.get(yy as usize).map(|row| row[x]) == Some('|')
                };
                let (dashes, bars) = (dash(-1) || dash(1), bar(-1) || bar(1));
                canvas[y][x] = match (dashes, bars) {
                    (true, true) => '+',
                    (false, true) => '|',
                    (true, false) if dash(-1) && dash(1) => '-',
                    (true, false) => '+',
                    (false, false) => ' ',
                };
            }
        }
        for t in &self.tiles {
            let mut label = t.v.to_string();
            if self.is_saturated(t) {
                label.push('*');
            }
            let (y, x) = (2 * t.i - 1, 4 * (t.j - 1) + 1);
            for (k, ch) in label.chars().take(3).enumerate() {
                canvas[y][x + k] = ch;
            }
        }
        let mut out = String::new();
        for line in canvas {
            let s: String = line.into_iter().collect();
            out.push_str(s.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

#[derive(Serialize, Deserialize)]
struct DominoJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    class: Option<DominoClass>,
    n: usize,
    m: usize,
    tiles: Vec<Tile>,
}

impl TryFrom<DominoJson> for DominoTableau {
    type Error = Error;

    /// Without a `class` field, a tableau with a single square is read as
    /// twisted and any other as a plain DPP.
    fn try_from(j: DominoJson) -> Result<Self> {
        if j.kind != "domino" {
            return Err(Error::invalid("domino", format!("kind is {:?}", j.kind)));
        }
        let class = j.class.unwrap_or_else(|| {
            if j.tiles.iter().any(|t| t.kind == TileKind::Single) {
                DominoClass::Gcspp
            } else {
                DominoClass::Dpp
            }
        });
        DominoTableau::new(class, j.n, j.m, j.tiles)
    }
}

impl From<DominoTableau> for DominoJson {
    fn from(d: DominoTableau) -> Self {
        DominoJson {
            kind: "domino".into(),
            class: Some(d.class),
            n: d.n,
            m: d.m,
            tiles: d.tiles,
        }
    }
}

fn part(p: &[usize], i: usize) -> usize {
    if i == 0 {
        usize::MAX
    } else {
        p.get(i - 1).copied().unwrap_or(0)
    }
}

/// Appends the forced tiling of the cells `lambda / mu` carrying `v`, or
/// explains why there is none. Singles are checked against the class here;
/// everything else is left to the validator.
fn tile_layer(
    class: DominoClass,
    big_n: usize,
    v: u8,
    mu: &[usize],
    lambda: &[usize],
    out: &mut Vec<Tile>,
) -> std::result::Result<(), String> {
    for i in 1..=lambda.len() {
        let (mu_i, lam_i) = (part(mu, i), part(lambda, i));
        if lam_i < mu_i {
            return Err(format!("cells above {v} are not nested in row {i}"));
        }
        if part(lambda, i + 2) > mu_i {
            return Err(format!("value {v} fills three cells of a column below row {i}"));
        }
        let below = part(lambda, i + 1);
        for j in mu_i + 1..=below {
            out.push(Tile::new(i, j, TileKind::Vertical, v));
        }
        let lo = mu_i.max(below);
        let hi = lam_i.min(part(mu, i - 1));
        if hi <= lo {
            continue;
        }
        let mut j = lo + 1;
        while j < hi {
            out.push(Tile::new(i, j, TileKind::Horizontal, v));
            j += 2;
        }
        if j == hi {
            let saturated = i == 1
                && (big_n as i64 - hi as i64).rem_euclid(2) == 1
                && i64::from(v) == domino_cap(big_n, hi);
            if !(class.allows_singles() && saturated) {
                return Err(format!("row {i} of value {v} has odd length and no saturated end"));
            }
            out.push(Tile::new(i, hi, TileKind::Single, v));
        }
    }
    Ok(())
}

/// Shapes `lambda` containing `mu` that can carry one more value: at most
/// `width` columns and no column gaining more than two cells.
fn layer_shapes(mu: &[usize], width: usize) -> Vec<Vec<usize>> {
    fn rec(mu: &[usize], width: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = acc.len() + 1;
        if i > mu.len() + 2 {
            let mut lambda = acc.clone();
            while lambda.last() == Some(&0) {
                lambda.pop();
            }
            out.push(lambda);
            return;
        }
        let mut upper = width.min(acc.last().copied().unwrap_or(usize::MAX));
        if i >= 3 {
            upper = upper.min(part(mu, i - 2));
        }
        let lower = part(mu, i);
        for l in lower..=upper {
            acc.push(l);
            rec(mu, width, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(mu, width, &mut Vec::new(), &mut out);
    out
}

/// Every member of the class, sorted.
pub fn enumerate_domino(class: DominoClass, n: usize, m: usize, opts: &EnumOptions) -> Result<Vec<DominoTableau>> {
    opts.check(n + m)?;
    let big_n = n + m;
    let top = domino_cap(big_n, 1).max(0) as u8;
    let width = |v: u8| (1..=n).take_while(|&j| domino_cap(big_n, j) >= i64::from(v)).count();

    fn descend(
        class: DominoClass,
        n: usize,
        m: usize,
        v: u8,
        mu: &[usize],
        tiles: &[Tile],
        width: &dyn Fn(u8) -> usize,
        out: &mut Vec<DominoTableau>,
    ) {
        if v == 0 {
            if let Ok(d) = DominoTableau::new(class, n, m, tiles.to_vec()) {
                out.push(d);
            }
            return;
        }
        for lambda in layer_shapes(mu, width(v)) {
            let mut next = tiles.to_vec();
            if tile_layer(class, n + m, v, mu, &lambda, &mut next).is_ok() {
                descend(class, n, m, v - 1, &lambda, &next, width, out);
            }
        }
    }

    if top == 0 {
        return Ok(vec![DominoTableau::empty(class, n, m)]);
    }
    let mut firsts = Vec::new();
    for lambda in layer_shapes(&[], width(top)) {
        let mut tiles = Vec::new();
        if tile_layer(class, big_n, top, &[], &lambda, &mut tiles).is_ok() {
            firsts.push((lambda, tiles));
        }
    }
    let mut out = run_shards(firsts, opts.jobs, |(lambda, tiles)| {
        let mut found = Vec::new();
        descend(class, n, m, top - 1, lambda, tiles, &width, &mut found);
        found
    });
    out.sort();
    Ok(out)
}

pub fn enumerate_gcspp(n: usize, m: usize, opts: &EnumOptions) -> Result<Vec<DominoTableau>> {
    enumerate_domino(DominoClass::Gcspp, n, m, opts)
}

pub fn enumerate_dpp(n: usize, m: usize, opts: &EnumOptions) -> Result<Vec<DominoTableau>> {
    enumerate_domino(DominoClass::Dpp, n, m, opts)
}

pub fn enumerate_rdpp(n: usize, m: usize, opts: &EnumOptions) -> Result<Vec<DominoTableau>> {
    enumerate_domino(DominoClass::Rdpp, n, m, opts)
}

pub fn enumerate_cdpp(n: usize, m: usize, opts: &EnumOptions) -> Result<Vec<DominoTableau>> {
    enumerate_domino(DominoClass::Cdpp, n, m, opts)
}

/// `sum t^{Ubar_k(d)}` over a class.
pub fn domino_genpoly(class: DominoClass, n: usize, m: usize, k: usize, opts: &EnumOptions) -> Result<TPoly> {
    let all = enumerate_domino(class, n, m, opts)?;
    Ok(TPoly::distribution(all.iter().map(|d| d.stat_ubar(k))))
}
