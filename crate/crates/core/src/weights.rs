//! Weight coordinates and the scalar data attached to them.
//!
//! The universal coordinate throughout is the Dynkin-label pair of Λ+ρ:
//! (n1, n2) = ((Λ+ρ, α1∨), (Λ+ρ, α2∨)). Working on Λ+ρ removes all ρ
//! bookkeeping: the shifted Weyl action becomes plain matrix action and the
//! Harish-Chandra parameters become linear forms in the labels.

use std::fmt;

use crate::error::Result;
use crate::rational::Rational;
use crate::rootsys::{g2, Root, WeylElement};

/// Dynkin labels of Λ+ρ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightLabels {
    pub n1: Rational,
    pub n2: Rational,
}

impl WeightLabels {
    pub fn new(n1: Rational, n2: Rational) -> Self {
        WeightLabels { n1, n2 }
    }

    pub fn from_ints(n1: i64, n2: i64) -> Self {
        WeightLabels {
            n1: Rational::from_int(n1),
            n2: Rational::from_int(n2),
        }
    }

    pub fn neg(&self) -> Self {
        WeightLabels {
            n1: self.n1.neg(),
            n2: self.n2.neg(),
        }
    }
}

impl fmt::Display for WeightLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.n1, self.n2)
    }
}

/// Harish-Chandra parameters m_β = (Λ+ρ, β∨), indexed by the positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HCParams(pub [Rational; 6]);

impl HCParams {
    pub fn along(&self, root: &Root) -> Rational {
        self.0[(root.index - 1) as usize]
    }
}

/// m_β for all six positive roots: (n1, n2, n1+3n2, 2n1+3n2, n1+n2, n1+2n2).
pub fn hc_params(labels: &WeightLabels) -> Result<HCParams> {
    let sys = g2();
    let mut out = [Rational::ZERO; 6];
    for (i, root) in sys.roots.iter().enumerate() {
        let (c1, c2) = sys.coroot(root);
        out[i] = labels.n1.mul(&c1)?.add(&labels.n2.mul(&c2)?)?;
    }
    Ok(HCParams(out))
}

/// Applies a Weyl element's matrix to the label pair (the shifted action).
pub fn shifted_action(w: &WeylElement, labels: &WeightLabels) -> Result<WeightLabels> {
    let m = w.matrix;
    let n1 = labels.n1.scale(m[0][0])?.add(&labels.n2.scale(m[0][1])?)?;
    let n2 = labels.n1.scale(m[1][0])?.add(&labels.n2.scale(m[1][1])?)?;
    Ok(WeightLabels { n1, n2 })
}

/// Labels after subtracting k·β from the weight: n_i - k·(β, αi∨).
pub fn subtract_root_multiple(
    labels: &WeightLabels,
    k: &Rational,
    beta: &Root,
) -> Result<WeightLabels> {
    let (p1, p2) = g2().pairing_row(beta);
    Ok(WeightLabels {
        n1: labels.n1.sub(&k.scale(p1)?)?,
        n2: labels.n2.sub(&k.scale(p2)?)?,
    })
}

/// c = -(2n2 + n1)/2 = -m_{α6}/2, the highest-root Harish-Chandra parameter
/// with a factor -1/2.
pub fn c_param(labels: &WeightLabels) -> Result<Rational> {
    labels.n2.scale(2)?.add(&labels.n1)?.neg().halve()
}

/// d = 3/2 + c. The constant is pinned by the trivial representation
/// (labels (1,1)) having conformal weight zero.
pub fn conformal_weight(c: &Rational) -> Result<Rational> {
    Rational::new(3, 2).expect("const").add(c)
}

/// Signature [n1, n2; c] of an elementary representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub labels: WeightLabels,
    pub c: Rational,
}

impl Signature {
    pub fn of(labels: WeightLabels) -> Result<Self> {
        let c = c_param(&labels)?;
        Ok(Signature { labels, c })
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{},{}; {}}}",
            self.labels.n1, self.labels.n2, self.c
        )
    }
}

/// The Knapp-Stein partner [-n1, -n2; -c].
pub fn ks_partner(sig: &Signature) -> Signature {
    Signature {
        labels: sig.labels.neg(),
        c: sig.c.neg(),
    }
}

/// G2 Weyl dimension formula on Λ+ρ labels: m1·m2·m3·m4·m5·m6 / 120,
/// normalized so labels (1,1) give 1.
pub fn weyl_dim(labels: &WeightLabels) -> Result<Rational> {
    let hc = hc_params(labels)?;
    let mut product = Rational::ONE;
    for m in &hc.0 {
        product = product.mul(m)?;
    }
    product.div(&Rational::from_int(120))
}
