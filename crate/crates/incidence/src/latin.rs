//! Latin squares without principal intercalates.
//!
//! The complete-graph colorer rests on one combinatorial object: an `n x n`
//! Latin square with constant diagonal and no principal intercalate (a
//! `2 x 2` Latin subsquare picked from the same rows as columns). This module
//! constructs such squares for every order `n != 2, 4` in `O(n^2)`:
//!
//! * odd `n`: the circulant over `0..n` works directly;
//! * `n = 2^t`, `t >= 3`: repeated order-doubling of a fixed `8 x 8` base;
//! * other even `n = 2^t * m` (`m >= 3` odd): order-doubling of the circulant
//!   of order `m`.
//!
//! The doubling operator takes `A` to the block square `[[A, A+n], [B, A]]`
//! where `B` is the transpose of `A+n` with its columns rotated one step to
//! the right; it preserves both the Latin property and the absence of
//! principal intercalates.

use thiserror::Error;

use crate::par::{map_collect, ExecMode};

pub type Symbol = u16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatinError {
    #[error("symbol sequence must be non-empty")]
    EmptySymbols,
    #[error("matrix is not a Latin square")]
    NotLatin,
    #[error("no Latin square of order {0} without principal intercalates exists")]
    NoSuchSquare(usize),
    #[error("diagonal is not constant")]
    NonConstantDiagonal,
    #[error("order {0} is not an even non-power-of-two")]
    BadDecomposition(usize),
    #[error("order {0} exceeds the supported maximum {max}", max = Symbol::MAX as usize + 1)]
    OrderTooLarge(usize),
}

/// Dense row-major square matrix over symbols `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Square {
    n: usize,
    cells: Vec<Symbol>,
}

impl Square {
    pub fn from_rows(rows: &[Vec<Symbol>]) -> Result<Self, LatinError> {
        let n = rows.len();
        if n == 0 {
            return Err(LatinError::EmptySymbols);
        }
        if n > Symbol::MAX as usize + 1 {
            return Err(LatinError::OrderTooLarge(n));
        }
        let mut cells = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(LatinError::NotLatin);
            }
            cells.extend_from_slice(row);
        }
        Ok(Square { n, cells })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry at 1-based row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> Symbol {
        self.cells[(i - 1) * self.n + (j - 1)]
    }

    fn set(&mut self, i: usize, j: usize, v: Symbol) {
        self.cells[(i - 1) * self.n + (j - 1)] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Symbol]> {
        self.cells.chunks(self.n)
    }

    /// Each symbol `0..n` exactly once per row and per column.
    pub fn is_latin(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n];
        for i in 1..=n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 1..=n {
                let v = self.get(i, j) as usize;
                if v >= n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        for j in 1..=n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 1..=n {
                let v = self.get(i, j) as usize;
                if v >= n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        true
    }

    pub fn constant_diagonal(&self) -> Option<Symbol> {
        let d = self.get(1, 1);
        (2..=self.n).all(|i| self.get(i, i) == d).then_some(d)
    }
}

/// A validated Latin square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare(Square);

impl LatinSquare {
    pub fn new(square: Square) -> Result<Self, LatinError> {
        if square.is_latin() {
            Ok(LatinSquare(square))
        } else {
            Err(LatinError::NotLatin)
        }
    }

    pub fn as_square(&self) -> &Square {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn get(&self, i: usize, j: usize) -> Symbol {
        self.0.get(i, j)
    }

    pub fn constant_diagonal(&self) -> Option<Symbol> {
        self.0.constant_diagonal()
    }
}

/// A `2 x 2` Latin subsquare: `cells(i,m) = cells(j,n) = a` and
/// `cells(i,n) = cells(j,m) = b` with `a != b`. Principal when it is picked
/// from the same rows as columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Intercalate {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
    pub symbols: (Symbol, Symbol),
}

impl Intercalate {
    pub fn is_principal(&self) -> bool {
        (self.rows.0 == self.cols.0 && self.rows.1 == self.cols.1)
            || (self.rows.0 == self.cols.1 && self.rows.1 == self.cols.0)
    }
}

/// The circulant matrix `m[i][j] = symbols[(j - i) mod n]`. It is Latin iff
/// the symbols are pairwise distinct, hence the plain [`Square`] return type.
pub fn circulant(symbols: &[Symbol]) -> Result<Square, LatinError> {
    let n = symbols.len();
    if n == 0 {
        return Err(LatinError::EmptySymbols);
    }
    if n > Symbol::MAX as usize + 1 {
        return Err(LatinError::OrderTooLarge(n));
    }
    let mut cells = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            cells.push(symbols[(n + j - i) % n]);
        }
    }
    Ok(Square { n, cells })
}

fn circulant_identity(n: usize) -> Result<LatinSquare, LatinError> {
    let symbols: Vec<Symbol> = (0..n as Symbol).collect();
    LatinSquare::new(circulant(&symbols)?)
}

/// Order-doubling step. Computed from the explicit entry formula:
///
/// ```text
/// m[i][j] = a[i][j]              1 <= i <= n, 1 <= j <= n
///         = a[i][j-n] + n        1 <= i <= n, n+1 <= j <= 2n
///         = a[n][i-n] + n        n+1 <= i <= 2n, j = 1
///         = a[j-1][i-n] + n      n+1 <= i <= 2n, 2 <= j <= n
///         = a[i-n][j-n]          n+1 <= i <= 2n, n+1 <= j <= 2n
/// ```
///
/// In debug builds the bottom-left block is cross-checked against the block
/// definition (transpose of `A + n` with columns rotated right by one).
///
/// Preservation of principal-intercalate-freeness needs order at least 2
/// (doubling `[[0]]` yields the 2x2 swap square, which is one big principal
/// intercalate); the constructions here only ever double orders 3 and up.
pub fn nabla(a: &LatinSquare) -> Result<LatinSquare, LatinError> {
    let n = a.order();
    if 2 * n > Symbol::MAX as usize + 1 {
        return Err(LatinError::OrderTooLarge(2 * n));
    }
    let ns = n as Symbol;
    let mut out = Square {
        n: 2 * n,
        cells: vec![0; 4 * n * n],
    };
    for i in 1..=n {
        for j in 1..=n {
            let v = a.get(i, j);
            out.set(i, j, v);
            out.set(i, j + n, v + ns);
            out.set(i + n, j + n, v);
        }
    }
    for i in n + 1..=2 * n {
        out.set(i, 1, a.get(n, i - n) + ns);
        for j in 2..=n {
            out.set(i, j, a.get(j - 1, i - n) + ns);
        }
    }
    debug_assert!(
        {
            // Block form: B = (A + nJ)^T with columns rotated right by one.
            let mut ok = true;
            for i in 1..=n {
                for j in 1..=n {
                    let src = if j == 1 { n } else { j - 1 };
                    let expected = a.get(src, i) + ns;
                    ok &= out.get(i + n, j) == expected;
                }
            }
            ok
        },
        "entry formula disagrees with the block definition of the doubling"
    );
    LatinSquare::new(out)
}

/// `t`-fold application of [`nabla`]; `t = 0` returns the input unchanged.
pub fn nabla_power(a: &LatinSquare, t: u32) -> Result<LatinSquare, LatinError> {
    let mut cur = a.clone();
    for _ in 0..t {
        cur = nabla(&cur)?;
    }
    Ok(cur)
}

/// The fixed `8 x 8` base square with zero diagonal and no principal
/// intercalates that seeds the power-of-two construction.
pub fn base8() -> LatinSquare {
    const ROWS: [[Symbol; 8]; 8] = [
        [0, 1, 2, 3, 4, 5, 6, 7],
        [2, 0, 7, 4, 5, 3, 1, 6],
        [3, 6, 0, 7, 2, 1, 4, 5],
        [4, 5, 6, 0, 3, 2, 7, 1],
        [7, 4, 5, 1, 0, 6, 3, 2],
        [1, 2, 4, 6, 7, 0, 5, 3],
        [5, 3, 1, 2, 6, 7, 0, 4],
        [6, 7, 3, 5, 1, 4, 2, 0],
    ];
    let rows: Vec<Vec<Symbol>> = ROWS.iter().map(|r| r.to_vec()).collect();
    LatinSquare::new(Square::from_rows(&rows).unwrap()).unwrap()
}

/// Writes even `n` (not a power of two) as `2^t * m` with `m >= 3` odd and
/// `t >= 1` maximal.
pub fn decompose_even(n: usize) -> Result<(usize, u32), LatinError> {
    if n == 0 || !n.is_multiple_of(2) || n.is_power_of_two() {
        return Err(LatinError::BadDecomposition(n));
    }
    let t = n.trailing_zeros();
    let m = n >> t;
    debug_assert!(m >= 3 && m % 2 == 1);
    Ok((m, t))
}

/// An `n x n` Latin square with all-zero diagonal and no principal
/// intercalates, for any `n != 2, 4`. Runs in `O(n^2)`.
pub fn latin_square_no_principal(n: usize) -> Result<LatinSquare, LatinError> {
    if n == 2 || n == 4 {
        return Err(LatinError::NoSuchSquare(n));
    }
    if n == 0 {
        return Err(LatinError::EmptySymbols);
    }
    if n % 2 == 1 {
        circulant_identity(n)
    } else if n.is_power_of_two() {
        let t = n.trailing_zeros();
        debug_assert!(t >= 3);
        nabla_power(&base8(), t - 3)
    } else {
        let (m, t) = decompose_even(n)?;
        nabla_power(&circulant_identity(m)?, t)
    }
}

/// All intercalates of `l`, or only the principal ones.
///
/// The full scan walks row pairs with a symbol-to-column index (`O(n^3)`
/// total); the principal-only scan is the `O(n^2)` mirror test
/// `cells(i,j) == cells(j,i)` plus equal diagonal entries. Results are sorted
/// by `(rows, cols)` and independent of execution mode.
pub fn find_intercalates(l: &LatinSquare, principal_only: bool) -> Vec<Intercalate> {
    find_intercalates_with(l, principal_only, ExecMode::default())
}

pub fn find_intercalates_with(
    l: &LatinSquare,
    principal_only: bool,
    mode: ExecMode,
) -> Vec<Intercalate> {
    let n = l.order();
    let mut found = Vec::new();
    if principal_only {
        for i in 1..=n {
            for j in i + 1..=n {
                if l.get(i, i) == l.get(j, j) && l.get(i, j) == l.get(j, i) {
                    found.push(Intercalate {
                        rows: (i, j),
                        cols: (i, j),
                        symbols: (l.get(i, i), l.get(i, j)),
                    });
                }
            }
        }
        return found;
    }
    let pairs: Vec<usize> = (1..=n).collect();
    let per_row: Vec<Vec<Intercalate>> = map_collect(mode, pairs, |i| {
        let mut local = Vec::new();
        let mut pos = vec![0usize; n];
        for j in i + 1..=n {
            for (col, &sym) in l.as_square().rows().nth(j - 1).unwrap().iter().enumerate() {
                pos[sym as usize] = col + 1;
            }
            for m in 1..=n {
                let a = l.get(i, m);
                let c = pos[a as usize]; // column where row j carries a
                if c > m && l.get(i, c) == l.get(j, m) {
                    local.push(Intercalate {
                        rows: (i, j),
                        cols: (m, c),
                        symbols: (a, l.get(i, c)),
                    });
                }
            }
        }
        local
    });
    for mut chunk in per_row {
        found.append(&mut chunk);
    }
    found.sort_unstable_by_key(|ic| (ic.rows, ic.cols));
    found
}

pub fn has_principal_intercalate(l: &LatinSquare) -> bool {
    let n = l.order();
    for i in 1..=n {
        for j in i + 1..=n {
            if l.get(i, i) == l.get(j, j) && l.get(i, j) == l.get(j, i) {
                return true;
            }
        }
    }
    false
}

/// Permutes symbols so that a constant diagonal becomes all zeros (swaps the
/// diagonal symbol with 0). Preserves the Latin property and all intercalate
/// structure.
pub fn normalize_symbols_diag_zero(l: &LatinSquare) -> Result<LatinSquare, LatinError> {
    let d = l
        .constant_diagonal()
        .ok_or(LatinError::NonConstantDiagonal)?;
    if d == 0 {
        return Ok(l.clone());
    }
    let mut out = l.as_square().clone();
    for v in out.cells.iter_mut() {
        if *v == d {
            *v = 0;
        } else if *v == 0 {
            *v = d;
        }
    }
    LatinSquare::new(out)
}

/// Reorders rows so that every diagonal entry equals `s` (the row carrying
/// `s` in column `i` moves to position `i`). Always possible since `s`
/// appears exactly once per column; preserves intercalate-freeness.
pub fn permute_rows_constant_diagonal(l: &LatinSquare, s: Symbol) -> LatinSquare {
    let n = l.order();
    assert!((s as usize) < n, "symbol {s} out of range for order {n}");
    let mut out = Square {
        n,
        cells: vec![0; n * n],
    };
    for j in 1..=n {
        let src = (1..=n)
            .find(|&i| l.get(i, j) == s)
            .expect("s occurs in every column");
        for col in 1..=n {
            out.set(j, col, l.get(src, col));
        }
    }
    LatinSquare::new(out).expect("row permutation preserves the Latin property")
}

/// Enumerates all Latin squares of the given small order, optionally
/// restricted to constant-diagonal ones. Intended for the exhaustive order-4
/// ground truth; the first-row choices fan out across workers.
pub fn enumerate_latin_squares(
    n: usize,
    constant_diagonal: bool,
    mode: ExecMode,
) -> Vec<LatinSquare> {
    assert!(
        (1..=5).contains(&n),
        "exhaustive enumeration is for tiny orders"
    );
    // Enumerate row by row; each row is a permutation compatible with the
    // column constraint.
    fn perms(n: usize) -> Vec<Vec<Symbol>> {
        fn rec(n: usize, cur: &mut Vec<Symbol>, used: &mut Vec<bool>, out: &mut Vec<Vec<Symbol>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v as Symbol);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
    let all_rows = perms(n);
    let first_rows: Vec<Vec<Symbol>> = all_rows.clone();

    let results: Vec<Vec<LatinSquare>> = map_collect(mode, first_rows, |first| {
        let mut out = Vec::new();
        let mut rows: Vec<Vec<Symbol>> = vec![first.clone()];
        fn extend(
            n: usize,
            all_rows: &[Vec<Symbol>],
            rows: &mut Vec<Vec<Symbol>>,
            constant_diagonal: bool,
            out: &mut Vec<LatinSquare>,
        ) {
            if rows.len() == n {
                let sq = Square::from_rows(rows).unwrap();
                if !constant_diagonal || sq.constant_diagonal().is_some() {
                    out.push(LatinSquare::new(sq).unwrap());
                }
                return;
            }
            'cand: for cand in all_rows {
                let r = rows.len();
                if constant_diagonal && cand[r] != rows[0][0] {
                    continue;
                }
                for prev in rows.iter() {
                    for c in 0..n {
                        if prev[c] == cand[c] {
                            continue 'cand;
                        }
                    }
                }
                rows.push(cand.clone());
                extend(n, all_rows, rows, constant_diagonal, out);
                rows.pop();
            }
        }
        extend(n, &all_rows, &mut rows, constant_diagonal, &mut out);
        out
    });
    let mut out = Vec::new();
    for mut chunk in results {
        out.append(&mut chunk);
    }
    out
}

/// Parses the `latin` text format: one row of space-separated symbols per
/// line.
pub fn parse_square(text: &str) -> Result<Square, LatinError> {
    let mut rows = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let row: Result<Vec<Symbol>, _> = line
            .split_whitespace()
            .map(|t| t.parse::<Symbol>())
            .collect();
        rows.push(row.map_err(|_| LatinError::NotLatin)?);
    }
    Square::from_rows(&rows)
}

pub fn format_square(sq: &Square) -> String {
    let mut out = String::new();
    for row in sq.rows() {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
