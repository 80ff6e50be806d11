use super::unipoly::UniPoly;
use super::{Coeff, CoeffError, CoeffRing, MultiPoly, RatFunc};

/// A Q-algebra endomorphism of the coefficient ring, given by the images of
/// the ring generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMap {
    images: Vec<Coeff>,
    identity: bool,
}

impl RingMap {
    pub fn new(ring: &CoeffRing, images: Vec<Coeff>) -> Result<Self, CoeffError> {
        if images.len() != ring.generators().len() || !images.iter().all(|c| ring.contains(c)) {
            return Err(CoeffError::RingMismatch);
        }
        let identity = images
            .iter()
            .enumerate()
            .all(|(k, img)| *img == ring.generator(k));
        Ok(RingMap { images, identity })
    }

    pub fn identity(ring: &CoeffRing) -> Self {
        let images = (0..ring.generators().len())
            .map(|k| ring.generator(k))
            .collect();
        RingMap {
            images,
            identity: true,
        }
    }

    pub fn images(&self) -> &[Coeff] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.identity
    }

    /// Checked form of [`RingMap::apply`].
    pub fn try_apply(&self, r: &Coeff) -> Result<Coeff, CoeffError> {
        match self.images.first() {
            Some(img) if !img.same_ring(r) => Err(CoeffError::RingMismatch),
            None if !matches!(r, Coeff::Rational(_)) => Err(CoeffError::RingMismatch),
            _ => Ok(self.apply(r)),
        }
    }

    pub fn apply(&self, r: &Coeff) -> Coeff {
        if self.identity {
            return r.clone();
        }
        match r {
            Coeff::Rational(_) => r.clone(),
            Coeff::Poly(p) => Coeff::Poly(self.apply_poly(p)),
            Coeff::Frac(f) => Coeff::Frac(self.apply_frac(f)),
        }
    }

    /// `sigma^k(r)`
    pub fn apply_pow(&self, r: &Coeff, k: u32) -> Coeff {
        if self.identity {
            return r.clone();
        }
        let mut out = r.clone();
        for _ in 0..k {
            out = self.apply(&out);
        }
        out
    }

    fn apply_poly(&self, p: &MultiPoly) -> MultiPoly {
        let images: Vec<&MultiPoly> = self
            .images
            .iter()
            .map(|c| match c {
                Coeff::Poly(q) => q,
                _ => unreachable!("image outside Q[y]"),
            })
            .collect();
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|img| vec![MultiPoly::one(img.vars().clone())])
            .collect();
        let mut out = MultiPoly::zero(p.vars().clone());
        for (m, c) in p.terms() {
            let mut t = MultiPoly::constant(p.vars().clone(), c.clone());
            for (k, &e) in m.iter().enumerate() {
                let cache = &mut powers[k];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul(images[k]);
                    cache.push(next);
                }
                t = t.mul(&cache[e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    fn frac_image(&self) -> &RatFunc {
        match &self.images[0] {
            Coeff::Frac(r) => r,
            _ => unreachable!("image outside Q(y)"),
        }
    }

    /// Image of a dense polynomial in the generator of Q(y).
    fn apply_dense(&self, u: &UniPoly) -> RatFunc {
        let img = self.frac_image();
        if img.is_polynomial() {
            let comp = u.compose(img.num_dense());
            return RatFunc::from_parts(img.var().clone(), comp, UniPoly::one());
        }
        let mut acc = RatFunc::zero(img.var().clone());
        for c in u.coeffs().iter().rev() {
            acc = acc
                .mul(img)
                .add(&RatFunc::constant(img.var().clone(), c.clone()));
        }
        acc
    }

    fn apply_frac(&self, f: &RatFunc) -> RatFunc {
        let num = self.apply_dense(f.num_dense());
        if f.den_dense().is_one() {
            return num;
        }
        let den = self.apply_dense(f.den_dense());
        num.mul(&den.inv().expect("twisting map sends a denominator to zero"))
    }
}

/// A sigma-derivation, given by the images of the ring generators and
/// extended by `d(rs) = sigma(r) d(s) + d(r) s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaDerivation {
    images: Vec<Coeff>,
    twist: RingMap,
    zero: bool,
}

impl SigmaDerivation {
    pub fn new(ring: &CoeffRing, twist: RingMap, images: Vec<Coeff>) -> Result<Self, CoeffError> {
        if images.len() != ring.generators().len() || !images.iter().all(|c| ring.contains(c)) {
            return Err(CoeffError::RingMismatch);
        }
        let zero = images.iter().all(Coeff::is_zero);
        Ok(SigmaDerivation {
            images,
            twist,
            zero,
        })
    }

    pub fn zero(ring: &CoeffRing, twist: RingMap) -> Self {
        let images = (0..ring.generators().len()).map(|_| ring.zero()).collect();
        SigmaDerivation {
            images,
            twist,
            zero: true,
        }
    }

    pub fn images(&self) -> &[Coeff] {
        &self.images
    }

    pub fn twist(&self) -> &RingMap {
        &self.twist
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn try_apply(&self, r: &Coeff) -> Result<Coeff, CoeffError> {
        match self.images.first() {
            Some(img) if !img.same_ring(r) => Err(CoeffError::RingMismatch),
            None if !matches!(r, Coeff::Rational(_)) => Err(CoeffError::RingMismatch),
            _ => Ok(self.apply(r)),
        }
    }

    pub fn apply(&self, r: &Coeff) -> Coeff {
        match r {
            Coeff::Rational(_) => r.ring().zero(),
            _ if self.zero => r.ring().zero(),
            Coeff::Poly(p) => self.apply_poly(p),
            Coeff::Frac(f) => Coeff::Frac(self.apply_frac(f)),
        }
    }

    fn apply_poly(&self, p: &MultiPoly) -> Coeff {
        let ring = CoeffRing::Polynomial(p.vars().clone());
        let m = ring.generators().len();
        let gens: Vec<Coeff> = (0..m).map(|k| ring.generator(k)).collect();
        // per generator: y^e, sigma(y)^e and d(y^e), grown on demand
        let mut y_pow: Vec<Vec<Coeff>> = vec![vec![ring.one()]; m];
        let mut s_pow: Vec<Vec<Coeff>> = vec![vec![ring.one()]; m];
        let mut d_pow: Vec<Vec<Coeff>> = vec![vec![ring.zero()]; m];
        let mut out = ring.zero();
        for (mono, c) in p.terms() {
            for k in 0..m {
                let e = mono[k] as usize;
                while d_pow[k].len() <= e {
                    let last = d_pow[k].len() - 1;
                    // d(y^(j+1)) = sigma(y) d(y^j) + d(y) y^j
                    let next = self.twist.images[k]
                        .mul(&d_pow[k][last])
                        .add(&self.images[k].mul(&y_pow[k][last]));
                    d_pow[k].push(next);
                    let ny = y_pow[k][last].mul(&gens[k]);
                    y_pow[k].push(ny);
                    let ns = s_pow[k][last].mul(&self.twist.images[k]);
                    s_pow[k].push(ns);
                }
            }
            // d(u * rest) = sigma(u) d(rest) + d(u) rest, peeling generators
            // from the last one
            let mut rest = ring.one();
            let mut d_rest = ring.zero();
            for k in (0..m).rev() {
                let e = mono[k] as usize;
                if e == 0 {
                    continue;
                }
                d_rest = s_pow[k][e].mul(&d_rest).add(&d_pow[k][e].mul(&rest));
                rest = y_pow[k][e].mul(&rest);
            }
            out = out.add(&d_rest.scale(c));
        }
        out
    }

    fn delta_dense(&self, u: &UniPoly, var: &std::sync::Arc<[String]>) -> RatFunc {
        let sig_y = match &self.twist.images[0] {
            Coeff::Frac(r) => r.clone(),
            _ => unreachable!(),
        };
        let d_y = match &self.images[0] {
            Coeff::Frac(r) => r.clone(),
            _ => unreachable!(),
        };
        let mut out = RatFunc::zero(var.clone());
        let mut d_pow = RatFunc::zero(var.clone());
        let mut y_pow = UniPoly::one();
        for (j, c) in u.coeffs().iter().enumerate() {
            if j > 0 {
                d_pow = sig_y.mul(&d_pow).add(&d_y.mul_poly(&y_pow));
                y_pow = y_pow.mul(&UniPoly::monomial(1, num_traits::One::one()));
            }
            if !num_traits::Zero::is_zero(c) {
                out = out.add(&d_pow.scale(c));
            }
        }
        out
    }

    fn apply_frac(&self, f: &RatFunc) -> RatFunc {
        let var = f.var();
        let da = self.delta_dense(f.num_dense(), var);
        if f.den_dense().is_one() {
            return da;
        }
        // d(a/b) = d(a)/b - sigma(a) d(b) / (sigma(b) b)
        let b = RatFunc::from_parts(var.clone(), f.den_dense().clone(), UniPoly::one());
        let a = RatFunc::from_parts(var.clone(), f.num_dense().clone(), UniPoly::one());
        let db = self.delta_dense(f.den_dense(), var);
        let sa = self.twist.apply_frac(&a);
        let sb = self.twist.apply_frac(&b);
        let b_inv = b.inv().unwrap();
        let sb_inv = sb.inv().expect("twisting map sends a denominator to zero");
        da.mul(&b_inv).sub(&sa.mul(&db).mul(&sb_inv).mul(&b_inv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn q_scaling_on_square() {
        let r = CoeffRing::polynomial(["y"]);
        let y = r.generator(0);
        let qq = q(5);
        let sigma = RingMap::new(&r, vec![y.scale(&qq)]).unwrap();
        assert_eq!(sigma.apply(&y.pow(2)), y.pow(2).scale(&q(25)));
        assert_eq!(sigma.apply(&r.from_int(5)), r.from_int(5));
    }

    #[test]
    fn polynomial_image_composes() {
        // sigma(y) = y^2 + 1 on y^2 + y gives y^4 + 3y^2 + 2
        let r = CoeffRing::polynomial(["y"]);
        let y = r.generator(0);
        let sigma = RingMap::new(&r, vec![y.pow(2).add(&r.one())]).unwrap();
        let expect = y.pow(4).add(&y.pow(2).scale(&q(3))).add(&r.from_int(2));
        assert_eq!(sigma.apply(&y.pow(2).add(&y)), expect);
    }

    #[test]
    fn derivative_of_cube() {
        let r = CoeffRing::polynomial(["y"]);
        let y = r.generator(0);
        let d = SigmaDerivation::new(&r, RingMap::identity(&r), vec![r.one()]).unwrap();
        assert_eq!(d.apply(&y.pow(3)), y.pow(2).scale(&q(3)));
        assert!(d.apply(&r.from_rational(BigRational::new(7.into(), 2.into()))).is_zero());
    }

    #[test]
    fn q_derivation_on_square() {
        // d(y^2) = sigma(y) d(y) + d(y) y = (q + 1) y
        let r = CoeffRing::polynomial(["y"]);
        let y = r.generator(0);
        let sigma = RingMap::new(&r, vec![y.scale(&q(2))]).unwrap();
        let d = SigmaDerivation::new(&r, sigma, vec![r.one()]).unwrap();
        assert_eq!(d.apply(&y.pow(2)), y.scale(&q(3)));
    }

    #[test]
    fn frac_quotient_rule() {
        let r = CoeffRing::rational_function("y");
        let y = r.generator(0);
        let d = SigmaDerivation::new(&r, RingMap::identity(&r), vec![r.one()]).unwrap();
        // d(1/y^2) = -2/y^3
        let inv2 = y.pow_signed(-2).unwrap();
        assert_eq!(d.apply(&inv2), y.pow_signed(-3).unwrap().scale(&q(-2)));
    }

    #[test]
    fn twisted_frac_rule_is_leibniz() {
        let r = CoeffRing::rational_function("y");
        let y = r.generator(0);
        let sigma = RingMap::new(&r, vec![y.scale(&q(3))]).unwrap();
        let d = SigmaDerivation::new(&r, sigma.clone(), vec![r.one()]).unwrap();
        let a = y.add(&r.one()).mul(&y.inv().unwrap());
        let b = y.pow(2).sub(&r.from_int(2));
        let lhs = d.apply(&a.mul(&b));
        let rhs = sigma.apply(&a).mul(&d.apply(&b)).add(&d.apply(&a).mul(&b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mismatched_ring_is_rejected() {
        let r = CoeffRing::polynomial(["y"]);
        let other = CoeffRing::polynomial(["z"]);
        let sigma = RingMap::identity(&r);
        assert_eq!(sigma.try_apply(&other.generator(0)), Err(CoeffError::RingMismatch));
        assert!(RingMap::new(&r, vec![other.generator(0)]).is_err());
    }
}
