//! The 4×4 Kummer matrix, its determinant and the kernel condition.

use crate::tensor::DiffRing;

/// Which expression fills the (2,2) slot of the matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KummerVariant {
    /// `−λ2 − 4Z`, consistent with the kernel equations.
    Kernel,
    /// `−λ2 − 4X`.
    Printed,
}

impl KummerVariant {
    pub fn label(self) -> &'static str {
        match self {
            KummerVariant::Kernel => "-l2-4Z",
            KummerVariant::Printed => "-l2-4X",
        }
    }
}

pub(crate) fn mul_int<R: DiffRing>(x: &R, k: i32) -> R {
    let mut acc = x.zero_like();
    for _ in 0..k.unsigned_abs() {
        acc = acc.add(x);
    }
    if k < 0 {
        acc.neg()
    } else {
        acc
    }
}

/// Kummer matrix in `X = ℘22`, `Y = ℘21`, `Z = ℘11` and `λ0..λ4`.
pub fn kummer_matrix<R: DiffRing>(x: &R, y: &R, z: &R, lam: &[R; 5], variant: KummerVariant) -> [[R; 4]; 4] {
    let two = mul_int(&x.one_like(), 2);
    let zero = x.zero_like();
    let l1h = lam[1].half();
    let l3h = lam[3].half();
    let s22 = match variant {
        KummerVariant::Kernel => lam[2].neg().sub(&mul_int(z, 4)),
        KummerVariant::Printed => lam[2].neg().sub(&mul_int(x, 4)),
    };
    let y2 = mul_int(y, 2);
    [
        [lam[0].neg(), l1h.clone(), mul_int(z, 2), y2.neg()],
        [l1h, s22, l3h.add(&y2), mul_int(x, 2)],
        [mul_int(z, 2), lam[3].half().add(&y2), lam[4].neg().sub(&mul_int(x, 4)), two.clone()],
        [y2.neg(), mul_int(x, 2), two, zero],
    ]
}

fn is_exact_zero<R: DiffRing>(x: &R) -> bool {
    matches!(x.zero_status(), crate::tensor::ZeroStatus::Zero)
}

fn det_rec<R: DiffRing>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    if n == 2 {
        return m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]));
    }
    // expand along the last row
    let last = &m[n - 1];
    let mut acc: Option<R> = None;
    for (col, entry) in last.iter().enumerate() {
        if is_exact_zero(entry) {
            continue;
        }
        let minor: Vec<Vec<R>> = m[..n - 1]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul(&det_rec(&minor));
        let term = if (n - 1 + col) % 2 == 1 { term.neg() } else { term };
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.unwrap_or_else(|| m[0][0].zero_like())
}

/// Cofactor-expansion determinant.
pub fn det4<R: DiffRing>(m: &[[R; 4]; 4]) -> R {
    let rows: Vec<Vec<R>> = m.iter().map(|r| r.to_vec()).collect();
    det_rec(&rows)
}

/// `K · (℘222, ℘221, ℘211, ℘111)ᵀ`.
pub fn kernel_product<R: DiffRing>(k: &[[R; 4]; 4], w: &[R; 4]) -> [R; 4] {
    std::array::from_fn(|r| {
        (1..4).fold(k[r][0].mul(&w[0]), |acc, c| acc.add(&k[r][c].mul(&w[c])))
    })
}

/// `X²Z² + 4YZ² − 2XY²Z + Y⁴`, the λ = 0 quartic.
pub fn quartic_at_zero_lambda<R: DiffRing>(x: &R, y: &R, z: &R) -> R {
    let z2 = z.mul(z);
    let y2 = y.mul(y);
    x.mul(x)
        .mul(&z2)
        .add(&mul_int(&y.mul(&z2), 4))
        .sub(&mul_int(&x.mul(&y2).mul(z), 2))
        .add(&y2.mul(&y2))
}
