//! Vertex functions `{0,1}^k -> Q`.
//!
//! Bit `i` of an input index (least significant first) is the value of the
//! `i`-th edge in the owning vertex's incidence list.  Symmetric functions
//! are stored by Hamming weight so that very wide EQ/EVEN/ODD/HW vertices
//! stay cheap; everything else is a dense table.

use num::{One, Zero};

use crate::cnf::Literal;
use crate::error::{invalid, limit, Result};
use crate::rational::{int, Rational};

/// Largest arity for which dense tables are materialised.
pub const DENSE_ARITY_CAP: usize = 20;

/// The built-in signature families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// 1 iff all inputs agree.
    Eq,
    /// 1 iff exactly one input is set.
    HwEq1,
    /// 1 iff at most one input is set.
    HwLe1,
    /// Parity of the inputs.
    Odd,
    /// Complement of the parity.
    Even,
    /// `w` on the all-zero input, 1 on weight-one inputs, 0 otherwise.
    Vtx(Rational),
    /// Binary: `00 -> 1`, `11 -> w`, mixed inputs 0.
    Edge(Rational),
    /// 1 on all-zeros, -1 on all-ones, 0 otherwise.
    EqMinus,
}

#[derive(Clone, Debug)]
enum Repr {
    /// Value indexed by Hamming weight; length `arity + 1`.
    Symmetric(Vec<Rational>),
    /// Dense table of length `2^arity`.
    Table(Vec<Rational>),
}

#[derive(Clone, Debug)]
pub struct Signature {
    arity: usize,
    repr: Repr,
}

impl Signature {
    /// Symmetric signature from its values at Hamming weights `0..=arity`.
    pub fn symmetric(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return invalid("symmetric signature needs at least one value");
        }
        Ok(Self {
            arity: values.len() - 1,
            repr: Repr::Symmetric(values),
        })
    }

    /// Dense signature; the table length must be a power of two.
    pub fn from_table(table: Vec<Rational>) -> Result<Self> {
        let n = table.len();
        if n == 0 || !n.is_power_of_two() {
            return invalid(format!("table length {n} is not a power of two"));
        }
        Ok(Self {
            arity: n.trailing_zeros() as usize,
            repr: Repr::Table(table),
        })
    }

    /// Arity-0 signature with the given value.
    pub fn constant(c: Rational) -> Self {
        Self {
            arity: 0,
            repr: Repr::Symmetric(vec![c]),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn value(&self, x: u64) -> Rational {
        self.value_ref(x).clone()
    }

    pub(crate) fn value_ref(&self, x: u64) -> &Rational {
        debug_assert!(self.arity >= 64 || x >> self.arity == 0);
        match &self.repr {
            Repr::Symmetric(v) => &v[x.count_ones() as usize],
            Repr::Table(t) => &t[x as usize],
        }
    }

    /// Values by Hamming weight, if the stored form is symmetric.
    pub fn symmetric_values(&self) -> Option<&[Rational]> {
        match &self.repr {
            Repr::Symmetric(v) => Some(v),
            Repr::Table(_) => None,
        }
    }

    /// Dense truth table, refused above [`DENSE_ARITY_CAP`].
    pub fn table(&self) -> Result<Vec<Rational>> {
        self.table_capped(DENSE_ARITY_CAP)
    }

    pub fn table_capped(&self, cap: usize) -> Result<Vec<Rational>> {
        if self.arity > cap {
            return limit(format!(
                "dense table of arity {} exceeds cap {cap}",
                self.arity
            ));
        }
        Ok((0..1u64 << self.arity).map(|x| self.value(x)).collect())
    }

    /// True iff every input with a nonzero value has even Hamming weight.
    pub fn is_even(&self) -> bool {
        match &self.repr {
            Repr::Symmetric(v) => v.iter().skip(1).step_by(2).all(Zero::is_zero),
            Repr::Table(t) => t
                .iter()
                .enumerate()
                .all(|(x, v)| v.is_zero() || x.count_ones() % 2 == 0),
        }
    }

    /// Nonzero entries, in increasing index order.
    pub fn support(&self, max_entries: usize) -> Result<Vec<(u64, Rational)>> {
        let mut out = Vec::new();
        let push = |x: u64, v: &Rational, out: &mut Vec<(u64, Rational)>| {
            if out.len() == max_entries {
                return limit(format!("signature support exceeds {max_entries} entries"));
            }
            out.push((x, v.clone()));
            Ok(())
        };
        match &self.repr {
            Repr::Table(t) => {
                for (x, v) in t.iter().enumerate() {
                    if !v.is_zero() {
                        push(x as u64, v, &mut out)?;
                    }
                }
            }
            Repr::Symmetric(vals) => {
                if self.arity >= 64 {
                    return limit("support enumeration above arity 63");
                }
                let mut by_index = Vec::new();
                for (h, v) in vals.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    for x in subsets_of_size(self.arity, h) {
                        push(x, v, &mut by_index)?;
                    }
                }
                by_index.sort_by_key(|(x, _)| *x);
                out = by_index;
            }
        }
        Ok(out)
    }

    /// The signature seen after reordering the incidence list so that new
    /// position `i` holds old position `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.arity {
            return invalid("permutation length differs from arity");
        }
        let mut seen = vec![false; self.arity];
        for &p in perm {
            if p >= self.arity || std::mem::replace(&mut seen[p], true) {
                return invalid("not a permutation");
            }
        }
        if self.symmetric_values().is_some() {
            return Ok(self.clone());
        }
        let table = (0..1u64 << self.arity)
            .map(|y| {
                let x = perm
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, &p)| acc | (((y >> i) & 1) << p));
                self.value(x)
            })
            .collect();
        Self::from_table(table)
    }

    fn symmetric_is(&self, f: impl Fn(usize, usize) -> i64) -> bool {
        match &self.repr {
            Repr::Symmetric(v) => v
                .iter()
                .enumerate()
                .all(|(h, x)| *x == int(f(h, self.arity))),
            Repr::Table(_) => false,
        }
    }

    /// Whether this is HW_{=1} (equivalently VTX_0) of its arity.
    pub fn is_hw_eq1(&self) -> bool {
        self.symmetric_is(|h, _| (h == 1) as i64)
    }

    /// Whether this is EVEN of its arity.
    pub fn is_even_parity(&self) -> bool {
        self.symmetric_is(|h, _| (h % 2 == 0) as i64)
    }

    /// Whether this is ODD of its arity.
    pub fn is_odd_parity(&self) -> bool {
        self.symmetric_is(|h, _| (h % 2 == 1) as i64)
    }

    /// Whether this is EQ of its arity.
    pub fn is_equality(&self) -> bool {
        self.symmetric_is(|h, k| (h == 0 || h == k) as i64)
    }

    /// The weight `w` if this is EDGE_w.
    pub fn edge_weight(&self) -> Option<&Rational> {
        match &self.repr {
            Repr::Symmetric(v) if self.arity == 2 && v[0].is_one() && v[1].is_zero() => Some(&v[2]),
            _ => None,
        }
    }

    /// The weight `w` if this is VTX_w.
    pub fn vertex_weight(&self) -> Option<&Rational> {
        match &self.repr {
            Repr::Symmetric(v)
                if v.iter().skip(2).all(Zero::is_zero) && (self.arity == 0 || v[1].is_one()) =>
            {
                Some(&v[0])
            }
            _ => None,
        }
    }
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        if self.arity != other.arity {
            return false;
        }
        match (&self.repr, &other.repr) {
            (Repr::Symmetric(a), Repr::Symmetric(b)) => a == b,
            (Repr::Table(a), Repr::Table(b)) => a == b,
            _ if self.arity < 64 => {
                (0..1u64 << self.arity).all(|x| self.value_ref(x) == other.value_ref(x))
            }
            _ => false,
        }
    }
}

impl Eq for Signature {}

/// Constructs a built-in signature of the given arity.
pub fn builtin_signature(kind: Builtin, arity: usize) -> Result<Signature> {
    let k = arity;
    let sym = |f: &dyn Fn(usize) -> Rational| Signature::symmetric((0..=k).map(f).collect());
    match kind {
        Builtin::Eq => sym(&|h| int((h == 0 || h == k) as i64)),
        Builtin::HwEq1 => sym(&|h| int((h == 1) as i64)),
        Builtin::HwLe1 => sym(&|h| int((h <= 1) as i64)),
        Builtin::Odd => sym(&|h| int((h % 2 == 1) as i64)),
        Builtin::Even => sym(&|h| int((h % 2 == 0) as i64)),
        Builtin::Vtx(w) => sym(&|h| match h {
            0 => w.clone(),
            1 => Rational::one(),
            _ => Rational::zero(),
        }),
        Builtin::Edge(w) => {
            if k != 2 {
                return invalid(format!("EDGE signatures are binary, got arity {k}"));
            }
            sym(&|h| match h {
                0 => Rational::one(),
                2 => w.clone(),
                _ => Rational::zero(),
            })
        }
        Builtin::EqMinus => {
            if k == 0 {
                return invalid("EQ_minus needs arity at least 1");
            }
            sym(&|h| match h {
                0 => Rational::one(),
                h if h == k => -Rational::one(),
                _ => Rational::zero(),
            })
        }
    }
}

/// Doubled clause function of arity `2d`: inputs whose pairs `(2i, 2i+1)`
/// agree take value 1 iff the clause is satisfied by the pair values;
/// every other input is 0.
pub fn clause_signature(clause: &[Literal], d: usize) -> Result<Signature> {
    if clause.len() != d {
        return invalid(format!(
            "clause has {} literals, expected width {d}",
            clause.len()
        ));
    }
    if 2 * d > DENSE_ARITY_CAP {
        return limit(format!("clause width {d} exceeds dense cap"));
    }
    let table = (0..1u64 << (2 * d))
        .map(|x| {
            let mut sat = false;
            for (i, lit) in clause.iter().enumerate() {
                let a = (x >> (2 * i)) & 1;
                if a != (x >> (2 * i + 1)) & 1 {
                    return Rational::zero();
                }
                sat |= (a == 1) == lit.is_positive();
            }
            int(sat as i64)
        })
        .collect();
    Signature::from_table(table)
}

/// All `n`-bit masks with exactly `h` bits set, in increasing order.
pub(crate) fn subsets_of_size(n: usize, h: usize) -> impl Iterator<Item = u64> {
    debug_assert!(n < 64);
    let end = 1u64 << n;
    let mut cur = if h > n {
        end
    } else if h == 0 {
        0
    } else {
        (1u64 << h) - 1
    };
    let mut done = h > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        if cur == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= end {
                done = true;
            }
        }
        Some(out)
    })
}
