use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

pub const MAX_VARS: usize = 8;

/// Variable names of a polynomial ring. The first `grading` variables
/// are the ones whose total degree drives truncation; the rest
/// (curve coefficients) are weightless.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Context {
    names: Vec<String>,
    grading: usize,
}

impl Context {
    pub fn new(names: &[&str], grading: usize) -> Arc<Context> {
        assert!(names.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        assert!(grading <= names.len());
        Arc::new(Context {
            names: names.iter().map(|s| s.to_string()).collect(),
            grading,
        })
    }

    /// `u, v, λ0..λ4`: the ring of sigma-series with symbolic curve coefficients.
    pub fn sigma() -> Arc<Context> {
        Context::new(&["u", "v", "l0", "l1", "l2", "l3", "l4"], 2)
    }

    /// `x1, x2` with no parameters.
    pub fn inversion() -> Arc<Context> {
        Context::new(&["x1", "x2"], 2)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn grading(&self) -> usize {
        self.grading
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Exponent vector packed into one byte per variable.
///
/// Slot 0 and 1 are always the grading variables (u,v or x1,x2).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_exponents(exps: &[u8]) -> Monomial {
        assert!(exps.len() <= MAX_VARS);
        let mut packed = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            packed |= (e as u64) << (8 * i);
        }
        Monomial(packed)
    }

    pub fn var(index: usize, power: u8) -> Monomial {
        assert!(index < MAX_VARS);
        Monomial((power as u64) << (8 * index))
    }

    #[inline]
    pub fn exponent(self, index: usize) -> u8 {
        (self.0 >> (8 * index)) as u8
    }

    pub fn exponents(self) -> [u8; MAX_VARS] {
        self.0.to_le_bytes()
    }

    /// Total degree in the two grading variables.
    #[inline]
    pub fn grading_degree(self) -> u32 {
        (self.0 & 0xff) as u32 + ((self.0 >> 8) & 0xff) as u32
    }

    /// True when no exponent outside the grading slots is nonzero.
    #[inline]
    pub fn is_parameter_free(self) -> bool {
        self.0 >> 16 == 0
    }

    pub fn parameter_part(self) -> Monomial {
        Monomial(self.0 & !0xffff)
    }

    /// Product of monomials. Exponents must stay below 256.
    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        debug_assert!(
            self.exponents()
                .iter()
                .zip(other.exponents().iter())
                .all(|(a, b)| (*a as u16 + *b as u16) < 256),
            "exponent overflow"
        );
        Monomial(self.0 + other.0)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(self, other: Monomial) -> Option<Monomial> {
        let a = self.exponents();
        let b = other.exponents();
        let mut out = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            out[i] = a[i].checked_sub(b[i])?;
        }
        Some(Monomial(u64::from_le_bytes(out)))
    }

    /// Lower the exponent of `index` by one, returning the old exponent.
    pub fn lower(self, index: usize) -> Option<(u8, Monomial)> {
        let e = self.exponent(index);
        (e > 0).then(|| (e, Monomial(self.0 - (1u64 << (8 * index)))))
    }

    pub fn fmt_in(self, ctx: &Context) -> String {
        let mut parts = Vec::new();
        for i in 0..ctx.len() {
            match self.exponent(i) {
                0 => {}
                1 => parts.push(ctx.name(i).to_string()),
                e => parts.push(format!("{}^{}", ctx.name(i), e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: grading degree first, then lex with the
    /// first grading variable largest, then the parameter exponents lex.
    fn cmp(&self, other: &Self) -> Ordering {
        self.grading_degree()
            .cmp(&other.grading_degree())
            .then_with(|| self.exponent(0).cmp(&other.exponent(0)))
            .then_with(|| {
                let a = self.exponents();
                let b = other.exponents();
                a[2..].cmp(&b[2..])
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({:?})", self.exponents())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_and_degrees() {
        let m = Monomial::from_exponents(&[2, 3, 0, 1]);
        assert_eq!(m.grading_degree(), 5);
        assert_eq!(m.exponent(3), 1);
        assert!(!m.is_parameter_free());
        assert_eq!(m.parameter_part(), Monomial::var(3, 1));
        let p = m.mul(Monomial::var(0, 1));
        assert_eq!(p.exponent(0), 3);
        assert_eq!(p.div(m), Some(Monomial::var(0, 1)));
        assert_eq!(m.div(p), None);
    }

    #[test]
    fn graded_lex_order() {
        let u = Monomial::var(0, 1);
        let v = Monomial::var(1, 1);
        let u2 = Monomial::var(0, 2);
        let uv = u.mul(v);
        assert!(u > v);
        assert!(u2 > uv);
        assert!(uv > v);
        assert!(Monomial::ONE < v);
        assert!(Monomial::var(0, 1) < Monomial::var(1, 2));
    }

    #[test]
    fn formatting() {
        let ctx = Context::sigma();
        let m = Monomial::from_exponents(&[5, 5, 0, 0, 1]);
        assert_eq!(m.fmt_in(&ctx), "u^5*v^5*l2");
        assert_eq!(Monomial::ONE.fmt_in(&ctx), "1");
    }
}
