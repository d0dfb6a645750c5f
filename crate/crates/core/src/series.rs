//! Exact multivariate polynomial arithmetic and rational generating
//! functions.
//!
//! Polynomials live in the markers t, u, x, y whose exponents record the
//! statistics cyc, fix, exc, inv. The series variable z is held externally:
//! a rational generating function is a pair of polynomial lists indexed by
//! z-power, and expansion extracts exact z^n coefficients by the linear
//! recurrence c_n = num_n - sum_{i>=1} den_i * c_{n-i}.
//!
//! Coefficients are i128 with checked arithmetic throughout; overflow is
//! reported, never wrapped.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::oracle::{distribution, DistributionQuery};
use crate::patterns::ClassId;
use crate::perm::StatVector;
use crate::{Error, Result};

/// Exact coefficient type. 128 bits holds every value this crate produces
/// with two orders of magnitude to spare at the default expansion depths.
pub type Coeff = i128;

/// One of the four statistic markers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Marker {
    /// t, counts cycles
    T,
    /// u, counts fixed points
    U,
    /// x, counts excedances
    X,
    /// y, counts inversions
    Y,
}

impl Marker {
    pub const ALL: [Marker; 4] = [Marker::T, Marker::U, Marker::X, Marker::Y];

    /// Statistic whose value the marker exponent records.
    pub fn stat_name(self) -> &'static str {
        match self {
            Marker::T => "cyc",
            Marker::U => "fix",
            Marker::X => "exc",
            Marker::Y => "inv",
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Marker::T => 't',
            Marker::U => 'u',
            Marker::X => 'x',
            Marker::Y => 'y',
        }
    }
}

/// Exponent vector (e_t, e_u, e_x, e_y). Ordering is lexicographic in that
/// field order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Default)]
pub struct Monomial {
    pub t: u16,
    pub u: u16,
    pub x: u16,
    pub y: u16,
}

impl Monomial {
    pub const UNIT: Monomial = Monomial {
        t: 0,
        u: 0,
        x: 0,
        y: 0,
    };

    pub fn new(t: u16, u: u16, x: u16, y: u16) -> Self {
        Monomial { t, u, x, y }
    }

    pub fn exponent(self, marker: Marker) -> u16 {
        match marker {
            Marker::T => self.t,
            Marker::U => self.u,
            Marker::X => self.x,
            Marker::Y => self.y,
        }
    }

    fn mul(self, other: Monomial) -> Result<Monomial> {
        let add = |a: u16, b: u16| a.checked_add(b).ok_or(Error::CoefficientOverflow);
        Ok(Monomial {
            t: add(self.t, other.t)?,
            u: add(self.u, other.u)?,
            x: add(self.x, other.x)?,
            y: add(self.y, other.y)?,
        })
    }

    fn erased(self, markers: &[Marker]) -> Monomial {
        let mut m = self;
        for &marker in markers {
            match marker {
                Marker::T => m.t = 0,
                Marker::U => m.u = 0,
                Marker::X => m.x = 0,
                Marker::Y => m.y = 0,
            }
        }
        m
    }
}

impl From<StatVector> for Monomial {
    fn from(s: StatVector) -> Monomial {
        Monomial {
            t: s.cyc,
            u: s.fix,
            x: s.exc,
            y: s.inv,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::UNIT {
            return write!(f, "1");
        }
        let mut first = true;
        for (marker, e) in [
            (Marker::T, self.t),
            (Marker::U, self.u),
            (Marker::X, self.x),
            (Marker::Y, self.y),
        ] {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", marker.symbol())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in t, u, x, y with exact integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Coeff>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant(c: Coeff) -> Self {
        let mut p = MultiPoly::default();
        if c != 0 {
            p.terms.insert(Monomial::UNIT, c);
        }
        p
    }

    /// Polynomial with a single term.
    pub fn term(c: Coeff, m: Monomial) -> Self {
        let mut p = MultiPoly::default();
        if c != 0 {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> Coeff {
        self.terms.get(&m).copied().unwrap_or(0)
    }

    /// Terms in ascending monomial order.
    pub fn iter(&self) -> impl Iterator<Item = (Monomial, Coeff)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn accumulate(&mut self, m: Monomial, c: Coeff) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(m).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::CoefficientOverflow)?;
        if *slot == 0 {
            self.terms.remove(&m);
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.accumulate(m, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.accumulate(m, c.checked_neg().ok_or(Error::CoefficientOverflow)?)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (ma, ca) in self.iter() {
            for (mb, cb) in other.iter() {
                let c = ca.checked_mul(cb).ok_or(Error::CoefficientOverflow)?;
                out.accumulate(ma.mul(mb)?, c)?;
            }
        }
        Ok(out)
    }

    /// Sets the given markers to 1, summing coefficients over the erased
    /// exponents.
    pub fn specialize(&self, markers: &[Marker]) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (m, c) in self.iter() {
            out.accumulate(m.erased(markers), c)?;
        }
        Ok(out)
    }

    /// Sum of all coefficients (every marker erased).
    pub fn total(&self) -> Result<Coeff> {
        let mut acc: Coeff = 0;
        for (_, c) in self.iter() {
            acc = acc.checked_add(c).ok_or(Error::CoefficientOverflow)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.iter().enumerate() {
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.unsigned_abs();
            if mag != 1 || m == Monomial::UNIT {
                write!(f, "{mag}")?;
                if m != Monomial::UNIT {
                    write!(f, "*")?;
                }
            }
            if m != Monomial::UNIT {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

/// Ratio of two polynomials in z with `MultiPoly` coefficients, normalized
/// so the denominator's constant term is 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalGf {
    num: Vec<MultiPoly>,
    den: Vec<MultiPoly>,
}

impl RationalGf {
    /// Builds a rational function from numerator and denominator coefficient
    /// lists (index = z power). The denominator constant term must be a unit;
    /// -1 is normalized by negating both sides.
    pub fn new(num: Vec<MultiPoly>, den: Vec<MultiPoly>) -> Result<Self> {
        let head = den.first().cloned().unwrap_or_default();
        if head == MultiPoly::one() {
            return Ok(RationalGf { num, den });
        }
        if head == MultiPoly::constant(-1) {
            let flip = |ps: Vec<MultiPoly>| -> Result<Vec<MultiPoly>> {
                ps.iter().map(|p| MultiPoly::zero().sub(p)).collect()
            };
            return Ok(RationalGf {
                num: flip(num)?,
                den: flip(den)?,
            });
        }
        Err(Error::UnnormalizedDenominator)
    }

    pub fn numerator(&self) -> &[MultiPoly] {
        &self.num
    }

    pub fn denominator(&self) -> &[MultiPoly] {
        &self.den
    }

    /// Exact series coefficients of num/den for z^0 ..= z^max_n.
    pub fn expand(&self, max_n: usize) -> Result<SeriesPrefix> {
        let mut coeffs: Vec<MultiPoly> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut c = self.num.get(n).cloned().unwrap_or_default();
            for i in 1..self.den.len().min(n + 1) {
                c = c.sub(&self.den[i].mul(&coeffs[n - i])?)?;
            }
            coeffs.push(c);
        }
        Ok(SeriesPrefix { coeffs })
    }
}

/// Expansion prefix: entry n is the exact z^n coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesPrefix {
    coeffs: Vec<MultiPoly>,
}

impl SeriesPrefix {
    /// Highest expanded order.
    pub fn max_n(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The z^n coefficient. Panics beyond `max_n`.
    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }
}

/// Names of the seven built-in generating functions.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum GfName {
    /// Av(312, 4321) by cycles.
    A,
    /// Av(312, 4321) by cycles, excedances, inversions.
    B,
    /// Av(312, 4321) by cycles and fixed points.
    C,
    /// Involutions in Av(312, 4321) by all four statistics.
    D,
    /// Av(321, 4123) by cycles.
    F,
    /// Av(321, 4123) by all four statistics.
    G,
    /// Involutions in Av(321, 4123) by all four statistics.
    H,
}

impl GfName {
    pub const ALL: [GfName; 7] = [
        GfName::A,
        GfName::B,
        GfName::C,
        GfName::D,
        GfName::F,
        GfName::G,
        GfName::H,
    ];

    /// The markers this generating function carries.
    pub fn markers(self) -> &'static [Marker] {
        match self {
            GfName::A | GfName::F => &[Marker::T],
            GfName::B => &[Marker::T, Marker::X, Marker::Y],
            GfName::C => &[Marker::T, Marker::U],
            GfName::D | GfName::G | GfName::H => &Marker::ALL,
        }
    }

    /// Markers the full joint distribution must erase to compare with this
    /// generating function.
    pub fn erased_markers(self) -> Vec<Marker> {
        Marker::ALL
            .into_iter()
            .filter(|m| !self.markers().contains(m))
            .collect()
    }

    /// The pattern class this generating function enumerates.
    pub fn class(self) -> ClassId {
        match self {
            GfName::A | GfName::B | GfName::C | GfName::D => ClassId::Av312_4321,
            GfName::F | GfName::G | GfName::H => ClassId::Av321_4123,
        }
    }

    /// Whether the enumeration is restricted to involutions.
    pub fn involutions_only(self) -> bool {
        matches!(self, GfName::D | GfName::H)
    }
}

impl fmt::Display for GfName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            GfName::A => 'A',
            GfName::B => 'B',
            GfName::C => 'C',
            GfName::D => 'D',
            GfName::F => 'F',
            GfName::G => 'G',
            GfName::H => 'H',
        };
        write!(f, "{c}")
    }
}

impl FromStr for GfName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(GfName::A),
            "B" | "b" => Ok(GfName::B),
            "C" | "c" => Ok(GfName::C),
            "D" | "d" => Ok(GfName::D),
            "F" | "f" => Ok(GfName::F),
            "G" | "g" => Ok(GfName::G),
            "H" | "h" => Ok(GfName::H),
            _ => Err(Error::Parse("generating function must be one of A,B,C,D,F,G,H")),
        }
    }
}

/// Single-term shorthand for the transcriptions below.
fn t(c: Coeff, t: u16, u: u16, x: u16, y: u16) -> (Coeff, Monomial) {
    (c, Monomial::new(t, u, x, y))
}

fn poly(terms: &[(Coeff, Monomial)]) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for &(c, m) in terms {
        p.accumulate(m, c).expect("transcribed coefficients are tiny");
    }
    p
}

/// The closed forms, transcribed with numerator and denominator expanded
/// into z-power lists of polynomials.
pub fn builtin_gf(name: GfName) -> RationalGf {
    let (num, den): (Vec<MultiPoly>, Vec<MultiPoly>) = match name {
        // tz(1 - z^2) / (1 - (1+t)(z + z^2) + tz^3)
        GfName::A => (
            alloc::vec![
                poly(&[]),
                poly(&[t(1, 1, 0, 0, 0)]),
                poly(&[]),
                poly(&[t(-1, 1, 0, 0, 0)]),
            ],
            alloc::vec![
                MultiPoly::one(),
                poly(&[t(-1, 0, 0, 0, 0), t(-1, 1, 0, 0, 0)]),
                poly(&[t(-1, 0, 0, 0, 0), t(-1, 1, 0, 0, 0)]),
                poly(&[t(1, 1, 0, 0, 0)]),
            ],
        ),
        // tz(1 - x^2 y^4 z^2) / (1 - z(xy + t) - xy^3 z^2 (t + xy) - x^2 y^4 z^3 (y - t - xy))
        GfName::B => (
            alloc::vec![
                poly(&[]),
                poly(&[t(1, 1, 0, 0, 0)]),
                poly(&[]),
                poly(&[t(-1, 1, 0, 2, 4)]),
            ],
            alloc::vec![
                MultiPoly::one(),
                poly(&[t(-1, 0, 0, 1, 1), t(-1, 1, 0, 0, 0)]),
                poly(&[t(-1, 1, 0, 1, 3), t(-1, 0, 0, 2, 4)]),
                poly(&[t(-1, 0, 0, 2, 5), t(1, 1, 0, 2, 4), t(1, 0, 0, 3, 5)]),
            ],
        ),
        // (tuz + tz^2(1-u) + tuz^3(t - tu - 1) + t^2 z^5 (1-u)^2)
        //   / (1 - z(1+tu) - z^2(1+t) + tuz^3(1 + tu - t) + tz^4(u-1) - t^2 z^5 (1-u)^2)
        GfName::C => (
            alloc::vec![
                poly(&[]),
                poly(&[t(1, 1, 1, 0, 0)]),
                poly(&[t(1, 1, 0, 0, 0), t(-1, 1, 1, 0, 0)]),
                poly(&[t(1, 2, 1, 0, 0), t(-1, 2, 2, 0, 0), t(-1, 1, 1, 0, 0)]),
                poly(&[]),
                poly(&[t(1, 2, 0, 0, 0), t(-2, 2, 1, 0, 0), t(1, 2, 2, 0, 0)]),
            ],
            alloc::vec![
                MultiPoly::one(),
                poly(&[t(-1, 0, 0, 0, 0), t(-1, 1, 1, 0, 0)]),
                poly(&[t(-1, 0, 0, 0, 0), t(-1, 1, 0, 0, 0)]),
                poly(&[t(1, 1, 1, 0, 0), t(1, 2, 2, 0, 0), t(-1, 2, 1, 0, 0)]),
                poly(&[t(1, 1, 1, 0, 0), t(-1, 1, 0, 0, 0)]),
                poly(&[t(-1, 2, 0, 0, 0), t(2, 2, 1, 0, 0), t(-1, 2, 2, 0, 0)]),
            ],
        ),
        // (tuz + txyz^2 + t^2 u x y^3 z^3) / (1 - utz - txyz^2 - t^2 u x y^3 z^3)
        GfName::D => (
            alloc::vec![
                poly(&[]),
                poly(&[t(1, 1, 1, 0, 0)]),
                poly(&[t(1, 1, 0, 1, 1)]),
                poly(&[t(1, 2, 1, 1, 3)]),
            ],
            alloc::vec![
                MultiPoly::one(),
                poly(&[t(-1, 1, 1, 0, 0)]),
                poly(&[t(-1, 1, 0, 1, 1)]),
                poly(&[t(-1, 2, 1, 1, 3)]),
            ],
        ),
        // tz(1 - z^2) / (1 - z(1+t) - 2z^2 + z^3)
        GfName::F => (
            alloc::vec![
                poly(&[]),
                poly(&[t(1, 1, 0, 0, 0)]),
                poly(&[]),
                poly(&[t(-1, 1, 0, 0, 0)]),
            ],
            alloc::vec![
                MultiPoly::one(),
                poly(&[t(-1, 0, 0, 0, 0), t(-1, 1, 0, 0, 0)]),
                poly(&[t(-2, 0, 0, 0, 0)]),
                poly(&[t(1, 0, 0, 0, 0)]),
            ],
        ),
        // tz(u + xyz(1-u) + xy^2 z^2 (1 - uxy^2 - u) + x^2 y^4 z^3 (xy - t)(u - 1))
        //   / (1 - z(xy + tu) + g2 z^2 + g3 z^3 + g4 z^4) with
        // g2 = xy(t(u-1) - y - xy^3)
        // g3 = xy^2(ut - t + xy^2(ut + xy - t))
        // g4 = t x^2 y^4 (xy - t)(1 - u)
        GfName::G => (
            alloc::vec![
                poly(&[]),
                poly(&[t(1, 1, 1, 0, 0)]),
                poly(&[t(1, 1, 0, 1, 1), t(-1, 1, 1, 1, 1)]),
                poly(&[t(1, 1, 0, 1, 2), t(-1, 1, 1, 2, 4), t(-1, 1, 1, 1, 2)]),
                poly(&[
                    t(1, 1, 1, 3, 5),
                    t(-1, 1, 0, 3, 5),
                    t(-1, 2, 1, 2, 4),
                    t(1, 2, 0, 2, 4),
                ]),
            ],
            alloc::vec![
                MultiPoly::one(),
                poly(&[t(-1, 0, 0, 1, 1), t(-1, 1, 1, 0, 0)]),
                poly(&[
                    t(1, 1, 1, 1, 1),
                    t(-1, 1, 0, 1, 1),
                    t(-1, 0, 0, 1, 2),
                    t(-1, 0, 0, 2, 4),
                ]),
                poly(&[
                    t(1, 1, 1, 1, 2),
                    t(-1, 1, 0, 1, 2),
                    t(1, 1, 1, 2, 4),
                    t(1, 0, 0, 3, 5),
                    t(-1, 1, 0, 2, 4),
                ]),
                poly(&[
                    t(1, 1, 0, 3, 5),
                    t(-1, 1, 1, 3, 5),
                    t(-1, 2, 0, 2, 4),
                    t(1, 2, 1, 2, 4),
                ]),
            ],
        ),
        // (tuz + txyz^2 + t^2 x^2 y^4 z^4) / (1 - tuz - txyz^2 - t^2 x^2 y^4 z^4)
        GfName::H => (
            alloc::vec![
                poly(&[]),
                poly(&[t(1, 1, 1, 0, 0)]),
                poly(&[t(1, 1, 0, 1, 1)]),
                poly(&[]),
                poly(&[t(1, 2, 0, 2, 4)]),
            ],
            alloc::vec![
                MultiPoly::one(),
                poly(&[t(-1, 1, 1, 0, 0)]),
                poly(&[t(-1, 1, 0, 1, 1)]),
                poly(&[]),
                poly(&[t(-1, 2, 0, 2, 4)]),
            ],
        ),
    };
    RationalGf::new(num, den).expect("built-in denominators are normalized")
}

/// Coefficient table of a cycle recurrence: `row(n)[k-1]` counts class
/// members of size n with k cycles, 1 <= k <= n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecurrenceTable {
    rows: Vec<Vec<Coeff>>,
}

impl RecurrenceTable {
    pub fn max_n(&self) -> usize {
        self.rows.len()
    }

    /// Row for size n (1-based). Panics beyond `max_n`.
    pub fn row(&self, n: usize) -> &[Coeff] {
        &self.rows[n - 1]
    }

    /// Entry a_n(k), zero outside 1 <= k <= n <= max_n.
    pub fn entry(&self, n: usize, k: usize) -> Coeff {
        if n < 1 || n > self.rows.len() || k < 1 || k > n {
            0
        } else {
            self.rows[n - 1][k - 1]
        }
    }
}

/// Oracle-seeded base rows (n <= 3) for a cycle recurrence.
fn base_rows(class: ClassId) -> Result<Vec<Vec<Coeff>>> {
    let mut rows = Vec::new();
    for n in 1..=3usize {
        let poly = distribution(&DistributionQuery::class(class, n))?
            .specialize(&[Marker::U, Marker::X, Marker::Y])?;
        let row = (1..=n)
            .map(|k| poly.coeff(Monomial::new(k as u16, 0, 0, 0)))
            .collect();
        rows.push(row);
    }
    Ok(rows)
}

fn checked_sum(parts: &[Coeff]) -> Result<Coeff> {
    let mut acc: Coeff = 0;
    for &p in parts {
        acc = acc.checked_add(p).ok_or(Error::CoefficientOverflow)?;
    }
    Ok(acc)
}

/// Cycle counts of Av(312, 4321):
/// a_n(k) = a_{n-1}(k) + a_{n-1}(k-1) + a_{n-2}(k-1) + a_{n-2}(k) - a_{n-3}(k-1)
/// for n >= 4, seeded by the oracle.
pub fn recurrence_a(max_n: usize) -> Result<RecurrenceTable> {
    let mut rows = base_rows(ClassId::Av312_4321)?;
    rows.truncate(max_n);
    let get = |rows: &Vec<Vec<Coeff>>, n: usize, k: i64| -> Coeff {
        if k < 1 || (k as usize) > n {
            0
        } else {
            rows[n - 1][k as usize - 1]
        }
    };
    for n in 4..=max_n {
        let mut row = Vec::with_capacity(n);
        for k in 1..=n as i64 {
            row.push(checked_sum(&[
                get(&rows, n - 1, k),
                get(&rows, n - 1, k - 1),
                get(&rows, n - 2, k - 1),
                get(&rows, n - 2, k),
                -get(&rows, n - 3, k - 1),
            ])?);
        }
        rows.push(row);
    }
    Ok(RecurrenceTable { rows })
}

/// Cycle counts of Av(321, 4123):
/// f_n(k) = f_{n-1}(k) + f_{n-1}(k-1) + 2 f_{n-2}(k) - f_{n-3}(k)
/// for n >= 4, seeded by the oracle.
pub fn recurrence_f(max_n: usize) -> Result<RecurrenceTable> {
    let mut rows = base_rows(ClassId::Av321_4123)?;
    rows.truncate(max_n);
    let get = |rows: &Vec<Vec<Coeff>>, n: usize, k: i64| -> Coeff {
        if k < 1 || (k as usize) > n {
            0
        } else {
            rows[n - 1][k as usize - 1]
        }
    };
    for n in 4..=max_n {
        let mut row = Vec::with_capacity(n);
        for k in 1..=n as i64 {
            row.push(checked_sum(&[
                get(&rows, n - 1, k),
                get(&rows, n - 1, k - 1),
                2 * get(&rows, n - 2, k),
                -get(&rows, n - 3, k),
            ])?);
        }
        rows.push(row);
    }
    Ok(RecurrenceTable { rows })
}

/// Cyclic permutation counts of the class for n = 1..=max_n: the t^1
/// coefficient row of its cycle generating function.
pub fn cyclic_sequence(class: ClassId, max_n: usize) -> Result<Vec<Coeff>> {
    let gf = match class {
        ClassId::Av312_4321 => builtin_gf(GfName::A),
        ClassId::Av321_4123 => builtin_gf(GfName::F),
    };
    let prefix = gf.expand(max_n)?;
    Ok((1..=max_n)
        .map(|n| prefix.coeff(n).coeff(Monomial::new(1, 0, 0, 0)))
        .collect())
}
