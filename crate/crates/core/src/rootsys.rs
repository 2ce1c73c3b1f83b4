//! The G2 root system and its Weyl group, in exact integer arithmetic.
//!
//! Simple roots are numbered α1 (short) and α2 (long) with Gram matrix
//! [[2, -3], [-3, 6]]. The six positive roots carry the fixed indexing
//! α1, α2, α3 = α1+α2, α4 = 2α1+α2, α5 = 3α1+α2, α6 = 3α1+2α2.
//! Roots are stored in simple-root integer coordinates; the ε-basis triple
//! (b1, b2, b3) with b1+b2+b3 = 0 is a derived view used for display and
//! cross-checks.

use std::fmt;
use std::sync::OnceLock;

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootLength {
    Short,
    Long,
}

/// A positive root of G2 (negatives are represented by negating coordinates
/// where needed; the catalog only stores the positive six).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Root {
    /// 1..=6, the fixed positive-root numbering.
    pub index: u8,
    /// (a, b) meaning a·α1 + b·α2.
    pub simple: (i64, i64),
    /// ε-basis coordinates, summing to zero.
    pub eps: (i64, i64, i64),
    pub length: RootLength,
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α{}", self.index)
    }
}

impl Root {
    /// Renders the simple-root combination, e.g. "3α1+2α2".
    pub fn combo(&self) -> String {
        let (a, b) = self.simple;
        let term = |coef: i64, name: &str| match coef {
            0 => String::new(),
            1 => name.to_string(),
            c => format!("{c}{name}"),
        };
        let t1 = term(a, "α1");
        let t2 = term(b, "α2");
        match (t1.is_empty(), t2.is_empty()) {
            (false, false) => format!("{t1}+{t2}"),
            (false, true) => t1,
            (true, false) => t2,
            (true, true) => "0".to_string(),
        }
    }
}

/// Symmetric bilinear form on the simple-root lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: [[i64; 2]; 2],
}

impl BilinearForm {
    pub const G2: BilinearForm = BilinearForm {
        gram: [[2, -3], [-3, 6]],
    };

    /// Inner product of two lattice vectors in simple-root coordinates.
    pub fn inner_coords(&self, u: (i64, i64), v: (i64, i64)) -> i64 {
        let g = self.gram;
        u.0 * (g[0][0] * v.0 + g[0][1] * v.1) + u.1 * (g[1][0] * v.0 + g[1][1] * v.1)
    }
}

type RootEntry = ((i64, i64), (i64, i64, i64));

const ROOT_DATA: [RootEntry; 6] = [
    ((1, 0), (1, -1, 0)),
    ((0, 1), (-1, 2, -1)),
    ((1, 1), (0, 1, -1)),
    ((2, 1), (1, 0, -1)),
    ((3, 1), (2, -1, -1)),
    ((3, 2), (1, 1, -2)),
];

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub roots: [Root; 6],
    pub form: BilinearForm,
}

/// The fixed G2 root system.
pub fn g2() -> &'static RootSystem {
    static SYSTEM: OnceLock<RootSystem> = OnceLock::new();
    SYSTEM.get_or_init(build_g2)
}

/// Builds the six positive roots with the fixed indexing.
pub fn build_g2() -> RootSystem {
    let form = BilinearForm::G2;
    let roots = std::array::from_fn(|i| {
        let (simple, eps) = ROOT_DATA[i];
        let sq = form.inner_coords(simple, simple);
        debug_assert!(sq == 2 || sq == 6);
        Root {
            index: (i + 1) as u8,
            simple,
            eps,
            length: if sq == 2 {
                RootLength::Short
            } else {
                RootLength::Long
            },
        }
    });
    RootSystem { roots, form }
}

impl RootSystem {
    pub fn root(&self, index: u8) -> &Root {
        &self.roots[(index - 1) as usize]
    }

    pub fn inner(&self, beta: &Root, gamma: &Root) -> Rational {
        Rational::from_int(self.form.inner_coords(beta.simple, gamma.simple))
    }

    /// Coordinates of β∨ = 2β/(β,β) over (α1∨, α2∨).
    ///
    /// Short roots give β∨ = β, long roots β∨ = β/3; either way the
    /// coordinates over the simple coroots come out integral.
    pub fn coroot(&self, beta: &Root) -> (Rational, Rational) {
        // β = aα1 + bα2, α1∨ = α1, α2∨ = α2/3:
        // β∨ = 2/(β,β) · (a α1∨ + 3b α2∨)
        let sq = self.form.inner_coords(beta.simple, beta.simple);
        let (a, b) = beta.simple;
        let c1 = Rational::new(2 * a, sq).expect("tiny");
        let c2 = Rational::new(2 * 3 * b, sq).expect("tiny");
        (c1, c2)
    }

    /// ((β, α1∨), (β, α2∨)): how subtracting β shifts the label pair.
    pub fn pairing_row(&self, beta: &Root) -> (i64, i64) {
        let p1 = 2 * self.form.inner_coords(beta.simple, (1, 0)) / 2;
        let p2 = 2 * self.form.inner_coords(beta.simple, (0, 1)) / 6;
        (p1, p2)
    }

    /// The positive root equal to β + γ, if any.
    pub fn root_sum(&self, beta: &Root, gamma: &Root) -> Option<&Root> {
        let sum = (beta.simple.0 + gamma.simple.0, beta.simple.1 + gamma.simple.1);
        self.roots.iter().find(|r| r.simple == sum)
    }

    /// Reflection of a lattice vector v (simple-root coordinates) in the
    /// hyperplane orthogonal to β: v - (v, β∨)·β.
    pub fn reflect(&self, beta: &Root, v: (i64, i64)) -> (i64, i64) {
        let sq = self.form.inner_coords(beta.simple, beta.simple);
        let k = 2 * self.form.inner_coords(v, beta.simple) / sq;
        (v.0 - k * beta.simple.0, v.1 - k * beta.simple.1)
    }
}

/// A Weyl group element acting on Dynkin-label pairs (n1, n2).
///
/// The word is over {'1','2'} in composition order: the rightmost letter acts
/// first, so "12" is s1∘s2. Equal matrices are merged and the stored word is
/// the lexicographically smallest among the shortest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub word: String,
    pub matrix: [[i64; 2]; 2],
}

pub const S1_MATRIX: [[i64; 2]; 2] = [[-1, 0], [1, 1]];
pub const S2_MATRIX: [[i64; 2]; 2] = [[1, 3], [0, -1]];
pub const IDENTITY_MATRIX: [[i64; 2]; 2] = [[1, 0], [0, 1]];

fn mat_mul(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn det(&self) -> i64 {
        self.matrix[0][0] * self.matrix[1][1] - self.matrix[0][1] * self.matrix[1][0]
    }

    /// Matrix of self ∘ other (other acts first).
    pub fn compose_matrix(&self, other: &WeylElement) -> [[i64; 2]; 2] {
        mat_mul(self.matrix, other.matrix)
    }
}

/// Word ordering used everywhere for node and element identity:
/// shorter first, then lexicographic.
pub fn word_key(word: &str) -> (usize, String) {
    (word.len(), word.to_string())
}

/// All 12 elements, sorted by (word length, word).
pub fn weyl_group() -> &'static Vec<WeylElement> {
    static GROUP: OnceLock<Vec<WeylElement>> = OnceLock::new();
    GROUP.get_or_init(|| {
        // Enumerate words over {1,2} in (length, lex) order and keep the
        // first word that realizes each matrix; that makes the stored word
        // canonical by construction.
        let mut elements: Vec<WeylElement> = Vec::new();
        let mut frontier = vec![String::new()];
        for _len in 0..=6 {
            for word in &frontier {
                let matrix = word.bytes().fold(IDENTITY_MATRIX, |acc, b| {
                    mat_mul(acc, if b == b'1' { S1_MATRIX } else { S2_MATRIX })
                });
                if !elements.iter().any(|e| e.matrix == matrix) {
                    elements.push(WeylElement {
                        word: word.clone(),
                        matrix,
                    });
                }
            }
            frontier = frontier
                .iter()
                .flat_map(|w| [format!("{w}1"), format!("{w}2")])
                .collect();
        }
        assert_eq!(elements.len(), 12);
        elements.sort_by_key(|e| word_key(&e.word));
        elements
    })
}

pub fn weyl_element(word: &str) -> &'static WeylElement {
    weyl_group()
        .iter()
        .find(|e| e.word == word)
        .expect("known word")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_positive_roots_with_fixed_eps_coords() {
        let sys = build_g2();
        assert_eq!(sys.roots.len(), 6);
        let eps: Vec<_> = sys.roots.iter().map(|r| r.eps).collect();
        assert_eq!(
            eps,
            vec![
                (1, -1, 0),
                (-1, 2, -1),
                (0, 1, -1),
                (1, 0, -1),
                (2, -1, -1),
                (1, 1, -2),
            ]
        );
        for r in &sys.roots {
            assert_eq!(r.eps.0 + r.eps.1 + r.eps.2, 0, "{r}");
        }
    }

    #[test]
    fn lengths_split_three_three() {
        let sys = g2();
        let short: Vec<u8> = sys
            .roots
            .iter()
            .filter(|r| r.length == RootLength::Short)
            .map(|r| r.index)
            .collect();
        assert_eq!(short, vec![1, 3, 4]);
        let long: Vec<u8> = sys
            .roots
            .iter()
            .filter(|r| r.length == RootLength::Long)
            .map(|r| r.index)
            .collect();
        assert_eq!(long, vec![2, 5, 6]);
    }

    #[test]
    fn inner_products_match_eps_dot() {
        let sys = g2();
        let dot = |a: (i64, i64, i64), b: (i64, i64, i64)| a.0 * b.0 + a.1 * b.1 + a.2 * b.2;
        for b in &sys.roots {
            for c in &sys.roots {
                assert_eq!(
                    sys.inner(b, c),
                    Rational::from_int(dot(b.eps, c.eps)),
                    "({b}, {c})"
                );
            }
        }
        assert_eq!(sys.inner(sys.root(1), sys.root(1)), Rational::from_int(2));
        assert_eq!(sys.inner(sys.root(2), sys.root(2)), Rational::from_int(6));
        assert_eq!(sys.inner(sys.root(1), sys.root(2)), Rational::from_int(-3));
        assert_eq!(sys.inner(sys.root(1), sys.root(6)), Rational::ZERO);
    }

    #[test]
    fn coroot_table() {
        let sys = g2();
        let r = |n, d| Rational::new(n, d).unwrap();
        let expected = [
            (r(1, 1), r(0, 1)), // α1∨ = α1
            (r(0, 1), r(1, 1)), // α2∨ = α2/3
            (r(1, 1), r(3, 1)), // α3∨ = α1∨ + 3α2∨
            (r(2, 1), r(3, 1)), // α4∨ = 2α1∨ + 3α2∨
            (r(1, 1), r(1, 1)), // α5∨ = α1∨ + α2∨
            (r(1, 1), r(2, 1)), // α6∨ = α1∨ + 2α2∨
        ];
        for (root, want) in sys.roots.iter().zip(expected) {
            assert_eq!(sys.coroot(root), want, "{root}");
        }
    }

    #[test]
    fn pairing_rows() {
        let sys = g2();
        let rows: Vec<_> = sys.roots.iter().map(|r| sys.pairing_row(r)).collect();
        assert_eq!(
            rows,
            vec![(2, -1), (-3, 2), (-1, 1), (1, 0), (3, -1), (0, 1)]
        );
    }

    #[test]
    fn root_sums() {
        let sys = g2();
        assert_eq!(sys.root_sum(sys.root(2), sys.root(5)).map(|r| r.index), Some(6));
        assert_eq!(sys.root_sum(sys.root(1), sys.root(3)).map(|r| r.index), Some(4));
        assert_eq!(sys.root_sum(sys.root(4), sys.root(5)), None);
    }

    #[test]
    fn reflection_negates_root_and_fixes_orthogonals() {
        let sys = g2();
        for beta in &sys.roots {
            let neg = sys.reflect(beta, beta.simple);
            assert_eq!(neg, (-beta.simple.0, -beta.simple.1), "{beta}");
            for v in &sys.roots {
                if sys.form.inner_coords(v.simple, beta.simple) == 0 {
                    assert_eq!(sys.reflect(beta, v.simple), v.simple);
                }
            }
        }
    }

    #[test]
    fn weyl_group_has_twelve_elements_with_canonical_words() {
        let words: Vec<&str> = weyl_group().iter().map(|e| e.word.as_str()).collect();
        assert_eq!(
            words,
            vec![
                "", "1", "2", "12", "21", "121", "212", "1212", "2121", "12121", "21212",
                "121212"
            ]
        );
        for e in weyl_group() {
            assert!(e.det() == 1 || e.det() == -1);
        }
    }

    #[test]
    fn braid_relation_and_longest_element() {
        let s1 = weyl_element("1");
        let s2 = weyl_element("2");
        let mut m = IDENTITY_MATRIX;
        for _ in 0..6 {
            m = mat_mul(m, mat_mul(s1.matrix, s2.matrix));
        }
        assert_eq!(m, IDENTITY_MATRIX);
        let longest = weyl_element("121212");
        assert_eq!(longest.matrix, [[-1, 0], [0, -1]]);
        // The two reduced spellings of the longest element coincide.
        let m121212 = [s1, s2, s1, s2, s1, s2]
            .iter()
            .fold(IDENTITY_MATRIX, |acc, e| mat_mul(acc, e.matrix));
        let m212121 = [s2, s1, s2, s1, s2, s1]
            .iter()
            .fold(IDENTITY_MATRIX, |acc, e| mat_mul(acc, e.matrix));
        assert_eq!(m121212, m212121);
    }

    #[test]
    fn group_closed_under_composition() {
        let group = weyl_group();
        for a in group {
            for b in group {
                let m = a.compose_matrix(b);
                assert!(group.iter().any(|e| e.matrix == m));
            }
        }
    }
}
