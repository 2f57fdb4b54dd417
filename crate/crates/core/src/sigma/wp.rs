//! ℘-functions as quotients over powers of σ.
//!
//! Index `1` is the `u` direction and index `2` the `v` direction, so
//! `X = ℘22`, `Y = ℘21`, `Z = ℘11`.

use std::sync::Arc;

use super::rational::{SigmaField, SigmaRational};
use super::series::SigmaSeries;
use crate::algebra::rational::int;
use crate::algebra::TruncatedSeries;
use crate::tensor::DiffRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Wp2 {
    P22,
    P21,
    P11,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Wp3 {
    P222,
    P221,
    P211,
    P111,
}

impl Wp2 {
    pub const ALL: [Wp2; 3] = [Wp2::P22, Wp2::P21, Wp2::P11];

    /// Coordinate slots (0 = u, 1 = v).
    pub fn coords(self) -> [usize; 2] {
        match self {
            Wp2::P22 => [1, 1],
            Wp2::P21 => [1, 0],
            Wp2::P11 => [0, 0],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Wp2::P22 => "22",
            Wp2::P21 => "21",
            Wp2::P11 => "11",
        }
    }
}

impl Wp3 {
    pub const ALL: [Wp3; 4] = [Wp3::P222, Wp3::P221, Wp3::P211, Wp3::P111];

    pub fn coords(self) -> [usize; 3] {
        match self {
            Wp3::P222 => [1, 1, 1],
            Wp3::P221 => [1, 1, 0],
            Wp3::P211 => [1, 0, 0],
            Wp3::P111 => [0, 0, 0],
        }
    }

    /// The second-order function and the coordinate it is differentiated in.
    pub fn as_derivative(self) -> (Wp2, usize) {
        match self {
            Wp3::P222 => (Wp2::P22, 1),
            Wp3::P221 => (Wp2::P22, 0),
            Wp3::P211 => (Wp2::P21, 0),
            Wp3::P111 => (Wp2::P11, 0),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Wp3::P222 => "222",
            Wp3::P221 => "221",
            Wp3::P211 => "211",
            Wp3::P111 => "111",
        }
    }
}

/// σ with its partial derivatives up to third order, over a shared field.
pub struct SigmaJets {
    pub field: Arc<SigmaField>,
    sigma: TruncatedSeries,
}

impl SigmaJets {
    pub fn new(s: &SigmaSeries) -> SigmaJets {
        SigmaJets {
            field: SigmaField::new(s.sigma.clone()),
            sigma: s.sigma.clone(),
        }
    }

    pub fn d(&self, coords: &[usize]) -> TruncatedSeries {
        coords.iter().fold(self.sigma.clone(), |acc, &c| acc.diff(c))
    }

    pub fn sigma(&self) -> &TruncatedSeries {
        &self.sigma
    }

    /// `℘ij = (σiσj − σσij)/σ²`.
    pub fn wp2(&self, ij: Wp2) -> SigmaRational {
        let [i, j] = ij.coords();
        let num = self.d(&[i]).mul(&self.d(&[j])).sub(&self.sigma.mul(&self.d(&[i, j])));
        SigmaRational::new(&self.field, num, 2, 0)
    }

    /// `℘ijk = −(σ²σijk − σ(σijσk + σikσj + σjkσi) + 2σiσjσk)/σ³`.
    pub fn wp3(&self, ijk: Wp3) -> SigmaRational {
        let [i, j, k] = ijk.coords();
        let s = &self.sigma;
        let (si, sj, sk) = (self.d(&[i]), self.d(&[j]), self.d(&[k]));
        let mixed = self
            .d(&[i, j])
            .mul(&sk)
            .add(&self.d(&[i, k]).mul(&sj))
            .add(&self.d(&[j, k]).mul(&si));
        let num = s
            .mul(s)
            .mul(&self.d(&[i, j, k]))
            .sub(&s.mul(&mixed))
            .add(&si.mul(&sj).mul(&sk).scale(&int(2)))
            .neg();
        SigmaRational::new(&self.field, num, 3, 0)
    }

    /// `℘ijk` obtained by differentiating the matching `℘ij`.
    pub fn wp3_by_derivative(&self, ijk: Wp3) -> SigmaRational {
        let (p, c) = ijk.as_derivative();
        self.wp2(p).derivative(c)
    }

    /// `℘2222, ℘2221, ℘2211, ℘2111, ℘1111` as derivatives of the
    /// closed-form `℘ijk`.
    pub fn wp4(&self) -> [SigmaRational; 5] {
        let p222 = self.wp3(Wp3::P222);
        let p221 = self.wp3(Wp3::P221);
        let p211 = self.wp3(Wp3::P211);
        let p111 = self.wp3(Wp3::P111);
        [
            p222.derivative(1),
            p222.derivative(0),
            p221.derivative(0),
            p211.derivative(0),
            p111.derivative(0),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;
    use crate::algebra::{term, Context, Poly};
    use crate::sigma::{build_sigma, LambdaMode, SigmaLevel};

    fn jets0() -> (Arc<Context>, SigmaJets) {
        let s = build_sigma(SigmaLevel::Three, LambdaMode::zero(), 16);
        (s.ctx().clone(), SigmaJets::new(&s))
    }

    #[test]
    fn second_order_at_zero_lambda() {
        let (ctx, j) = jets0();
        let x = j.wp2(Wp2::P22);
        let expect = &term(&ctx, int(2), &[1, 1]) + &term(&ctx, ratio(1, 3), &[0, 4]);
        assert_eq!(x.num.body(), &expect);
        assert_eq!(j.wp2(Wp2::P21).num.body(), &term(&ctx, int(-1), &[0, 2]));
        assert_eq!(j.wp2(Wp2::P11).num.body(), &Poly::constant(&ctx, int(1)));
    }

    #[test]
    fn third_order_at_zero_lambda() {
        let (ctx, j) = jets0();
        assert_eq!(j.wp3(Wp3::P111).num.body(), &Poly::constant(&ctx, int(-2)));
        let p221 = &term(&ctx, int(-2), &[1, 1]) + &term(&ctx, ratio(-4, 3), &[0, 4]);
        assert_eq!(j.wp3(Wp3::P221).num.body(), &p221);
        let p222 = &(&term(&ctx, int(2), &[2, 0]) + &term(&ctx, ratio(14, 3), &[1, 3]))
            + &term(&ctx, ratio(2, 9), &[0, 6]);
        assert_eq!(j.wp3(Wp3::P222).num.body(), &p222);
    }

    #[test]
    fn closed_forms_match_derivatives() {
        for level in SigmaLevel::ALL {
            let s = build_sigma(level, LambdaMode::Symbolic, 12);
            let j = SigmaJets::new(&s);
            for w in Wp3::ALL {
                let a = j.wp3(w).numerator_over(4, 0).unwrap();
                let b = j.wp3_by_derivative(w).numerator_over(4, 0).unwrap();
                assert_eq!(a.body(), b.body(), "℘{} level {level}", w.label());
            }
        }
    }

    #[test]
    fn cross_derivatives_agree() {
        let s = build_sigma(SigmaLevel::Five, LambdaMode::Symbolic, 12);
        let j = SigmaJets::new(&s);
        let a = j.wp2(Wp2::P22).derivative(0);
        let b = j.wp2(Wp2::P21).derivative(1);
        assert!(a.sub(&b).zero_status().is_zero_or_qualified());
        let a = j.wp2(Wp2::P21).derivative(0);
        let b = j.wp2(Wp2::P11).derivative(1);
        assert!(a.sub(&b).zero_status().is_zero_or_qualified());
    }

    #[test]
    fn parity_of_functions() {
        let s = build_sigma(SigmaLevel::Seven, LambdaMode::Symbolic, 12);
        let j = SigmaJets::new(&s);
        for w in Wp2::ALL {
            assert_eq!(j.wp2(w).parity(), Some(false));
        }
        for w in Wp3::ALL {
            assert_eq!(j.wp3(w).parity(), Some(true));
        }
    }
}
