use std::fmt;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Octonion;

/// An oriented triple `(a, b, c)` meaning `e_a e_b = e_c`.
pub type Triple = [u8; 3];

/// A published variant of the seven oriented lines with the `{1, 6, 7}` line
/// written as `(1, 6, 7)`. That orientation is inconsistent with the other
/// six: the resulting algebra has zero divisors, e.g. `(e1 + e2)(e4 + e7) = 0`.
pub const PRINTED_TRIPLES: [Triple; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [2, 4, 6],
    [3, 4, 7],
    [2, 5, 7],
    [1, 6, 7],
    [5, 3, 6],
];

/// Same lines with `{1, 6, 7}` oriented as `(1, 7, 6)`, which is what
/// Cayley-Dickson doubling with `e5 = e1 e4`, `e6 = e2 e4`, `e7 = e3 e4`
/// produces.
pub const CORRECTED_TRIPLES: [Triple; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [2, 4, 6],
    [3, 4, 7],
    [2, 5, 7],
    [1, 7, 6],
    [5, 3, 6],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableFlavor {
    /// [`PRINTED_TRIPLES`], kept to reproduce its defect.
    #[serde(rename = "paper")]
    Printed,
    /// The composition-algebra table.
    Corrected,
    /// Anything user supplied.
    Custom,
}

impl fmt::Display for TableFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableFlavor::Printed => "paper",
            TableFlavor::Corrected => "corrected",
            TableFlavor::Custom => "custom",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("expected 7 triples, got {0}")]
    WrongCount(usize),
    #[error("triple {index} has an index outside 1..=7")]
    IndexOutOfRange { index: usize },
    #[error("triple {index} repeats an index")]
    RepeatedIndex { index: usize },
    #[error("pair {{e{0}, e{1}}} appears in more than one triple")]
    DuplicatePair(u8, u8),
    #[error("pair {{e{0}, e{1}}} is not covered by any triple")]
    MissingPair(u8, u8),
}

/// Multiplication rule for the basis: `e_a e_b = -delta_ab + psi_abc e_c`
/// with `psi` totally antisymmetric and `+1` on every listed triple.
#[derive(Clone, Debug)]
pub struct StructureTable {
    flavor: TableFlavor,
    triples: Vec<Triple>,
    // e_i e_j = sign[i][j] * e_{index[i][j]}
    index: [[u8; 8]; 8],
    sign: [[f64; 8]; 8],
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    flavor: TableFlavor,
    triples: Vec<Triple>,
}

impl Serialize for StructureTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TableRepr { flavor: self.flavor, triples: self.triples.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for StructureTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = TableRepr::deserialize(d)?;
        StructureTable::from_triples(&repr.triples, repr.flavor).map_err(serde::de::Error::custom)
    }
}

static CORRECTED: LazyLock<StructureTable> = LazyLock::new(StructureTable::cayley_dickson);
static PRINTED: LazyLock<StructureTable> = LazyLock::new(|| {
    StructureTable::from_triples(&PRINTED_TRIPLES, TableFlavor::Printed)
        .expect("printed triples cover every pair")
});

/// Checks that the triples are seven lines of a Fano plane: every unordered
/// pair of imaginary indices lies in exactly one triple.
pub(crate) fn check_structure(triples: &[Triple]) -> Result<(), TableError> {
    if triples.len() != 7 {
        return Err(TableError::WrongCount(triples.len()));
    }
    let mut seen = [[false; 8]; 8];
    for (index, t) in triples.iter().enumerate() {
        if t.iter().any(|&x| !(1..=7).contains(&x)) {
            return Err(TableError::IndexOutOfRange { index });
        }
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            return Err(TableError::RepeatedIndex { index });
        }
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            let (lo, hi) = (a.min(b), a.max(b));
            if seen[lo as usize][hi as usize] {
                return Err(TableError::DuplicatePair(lo, hi));
            }
            seen[lo as usize][hi as usize] = true;
        }
    }
    for a in 1..8u8 {
        for b in a + 1..8 {
            if !seen[a as usize][b as usize] {
                return Err(TableError::MissingPair(a, b));
            }
        }
    }
    Ok(())
}

impl StructureTable {
    /// The default table, derived by Cayley-Dickson doubling.
    pub fn corrected() -> &'static StructureTable {
        &CORRECTED
    }

    /// The table built from [`PRINTED_TRIPLES`].
    pub fn printed() -> &'static StructureTable {
        &PRINTED
    }

    pub fn from_triples(triples: &[Triple], flavor: TableFlavor) -> Result<Self, TableError> {
        check_structure(triples)?;
        let mut index = [[0u8; 8]; 8];
        let mut sign = [[0.0f64; 8]; 8];
        for i in 0..8 {
            // e0 is the identity
            index[0][i] = i as u8;
            sign[0][i] = 1.0;
            index[i][0] = i as u8;
            sign[i][0] = 1.0;
        }
        for i in 1..8 {
            index[i][i] = 0;
            sign[i][i] = -1.0;
        }
        for t in triples {
            let [a, b, c] = t.map(usize::from);
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                index[x][y] = z as u8;
                sign[x][y] = 1.0;
                index[y][x] = z as u8;
                sign[y][x] = -1.0;
            }
        }
        Ok(StructureTable { flavor, triples: triples.to_vec(), index, sign })
    }

    /// Builds the table from `O = H + H e4` with the doubling product
    /// `(a, b)(c, d) = (ac - conj(d) b, da + b conj(c))`, then reads off the
    /// oriented triples from the basis products.
    fn cayley_dickson() -> StructureTable {
        let mut triples = Vec::with_capacity(7);
        for a in 1..8usize {
            for b in a + 1..8 {
                let p = cayley_dickson_mul(&Octonion::basis(a), &Octonion::basis(b));
                let (c, s) = p
                    .coords()
                    .iter()
                    .enumerate()
                    .find(|(_, x)| **x != 0.0)
                    .map(|(i, x)| (i, *x))
                    .expect("basis product is a signed basis element");
                // Record each line once, from its smallest pair.
                if c > b {
                    let t = if s > 0.0 { [a, b, c] } else { [b, a, c] };
                    triples.push(t.map(|x| x as u8));
                }
            }
        }
        StructureTable::from_triples(&triples, TableFlavor::Corrected)
            .expect("doubling yields a Fano plane")
    }

    pub fn flavor(&self) -> TableFlavor {
        self.flavor
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    /// `e_a e_b` as `(sign, index)`.
    pub fn basis_product(&self, a: usize, b: usize) -> (f64, usize) {
        (self.sign[a][b], self.index[a][b] as usize)
    }

    /// Structure constant `psi_abc` for imaginary indices.
    pub fn psi(&self, a: usize, b: usize, c: usize) -> i8 {
        if a == 0 || b == 0 || c == 0 || a == b {
            return 0;
        }
        let (s, k) = self.basis_product(a, b);
        if k == c {
            s as i8
        } else {
            0
        }
    }

    /// True when both tables give the same product on every basis pair.
    pub fn same_products(&self, other: &StructureTable) -> bool {
        self.index == other.index && self.sign == other.sign
    }

    /// `e_i x`, a signed permutation of the coordinates of `x`.
    pub fn mul_basis_left(&self, i: usize, x: &Octonion) -> Octonion {
        let y = x.coords();
        let mut out = [0.0f64; 8];
        for j in 0..8 {
            out[self.index[i][j] as usize] = self.sign[i][j] * y[j];
        }
        Octonion::from_coords(out)
    }

    pub fn mul(&self, a: &Octonion, b: &Octonion) -> Octonion {
        let (x, y) = (a.coords(), b.coords());
        let mut out = [0.0f64; 8];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0.0 {
                continue;
            }
            let (idx, sgn) = (&self.index[i], &self.sign[i]);
            for j in 0..8 {
                out[idx[j] as usize] += sgn[j] * xi * y[j];
            }
        }
        Octonion::from_coords(out)
    }
}

fn quat_mul(a: &[f64; 4], b: &[f64; 4]) -> [f64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn quat_conj(a: &[f64; 4]) -> [f64; 4] {
    [a[0], -a[1], -a[2], -a[3]]
}

/// Octonion product computed directly from the doubling formula on
/// quaternion halves. Independent of any [`StructureTable`].
pub fn cayley_dickson_mul(x: &Octonion, y: &Octonion) -> Octonion {
    let (a, b) = x.to_quaternion_pair();
    let (c, d) = y.to_quaternion_pair();
    let ac = quat_mul(&a, &c);
    let db = quat_mul(&quat_conj(&d), &b);
    let da = quat_mul(&d, &a);
    let bc = quat_mul(&b, &quat_conj(&c));
    Octonion::from_quaternion_pair(
        std::array::from_fn(|i| ac[i] - db[i]),
        std::array::from_fn(|i| da[i] + bc[i]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(i: usize) -> Octonion {
        Octonion::basis(i)
    }

    #[test]
    fn doubling_matches_corrected_listing() {
        let listed = StructureTable::from_triples(&CORRECTED_TRIPLES, TableFlavor::Corrected).unwrap();
        assert!(StructureTable::corrected().same_products(&listed));
        assert!(!StructureTable::corrected().same_products(StructureTable::printed()));
    }

    #[test]
    fn printed_and_corrected_differ_only_on_one_line() {
        let diffs: Vec<_> = PRINTED_TRIPLES
            .iter()
            .zip(CORRECTED_TRIPLES.iter())
            .filter(|(a, b)| a != b)
            .collect();
        assert_eq!(diffs, vec![(&[1, 6, 7], &[1, 7, 6])]);
    }

    #[test]
    fn table_mul_agrees_with_doubling_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let t = StructureTable::corrected();
        for _ in 0..1000 {
            let a = Octonion::random_gaussian(&mut rng);
            let b = Octonion::random_gaussian(&mut rng);
            let d = t.mul(&a, &b) - cayley_dickson_mul(&a, &b);
            assert!(d.norm() <= 1e-13 * a.norm() * b.norm());
        }
    }

    #[test]
    fn basis_left_multiplication() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let x = Octonion::random_gaussian(&mut rng);
        for t in [StructureTable::corrected(), StructureTable::printed()] {
            for i in 0..8 {
                assert_eq!(t.mul_basis_left(i, &x), t.mul(&e(i), &x));
            }
        }
    }

    #[test]
    fn zero_divisor_witness_under_printed_table() {
        let a = e(1) + e(2);
        let b = e(4) + e(7);
        assert_eq!(StructureTable::printed().mul(&a, &b), Octonion::ZERO);
        assert_eq!(StructureTable::corrected().mul(&a, &b), e(6) * 2.0);
    }

    #[test]
    fn psi_is_totally_antisymmetric() {
        for t in [StructureTable::corrected(), StructureTable::printed()] {
            for a in 1..8 {
                for b in 1..8 {
                    for c in 1..8 {
                        let p = t.psi(a, b, c);
                        assert_eq!(p, -t.psi(b, a, c));
                        assert_eq!(p, -t.psi(a, c, b));
                        assert_eq!(p, t.psi(b, c, a));
                    }
                }
            }
            for tr in t.triples() {
                let [a, b, c] = tr.map(usize::from);
                assert_eq!(t.psi(a, b, c), 1);
            }
        }
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let mut missing = CORRECTED_TRIPLES;
        missing[6] = [5, 3, 1];
        assert!(matches!(
            StructureTable::from_triples(&missing, TableFlavor::Custom),
            Err(TableError::DuplicatePair(..))
        ));
        assert_eq!(
            StructureTable::from_triples(&CORRECTED_TRIPLES[..6], TableFlavor::Custom).unwrap_err(),
            TableError::WrongCount(6)
        );
        let mut bad = CORRECTED_TRIPLES;
        bad[0] = [1, 1, 3];
        assert_eq!(
            StructureTable::from_triples(&bad, TableFlavor::Custom).unwrap_err(),
            TableError::RepeatedIndex { index: 0 }
        );
        bad[0] = [0, 2, 3];
        assert_eq!(
            StructureTable::from_triples(&bad, TableFlavor::Custom).unwrap_err(),
            TableError::IndexOutOfRange { index: 0 }
        );
    }

    #[test]
    fn json_round_trip() {
        let t = StructureTable::corrected();
        let s = serde_json::to_string(t).unwrap();
        assert!(s.contains("\"corrected\""));
        let back: StructureTable = serde_json::from_str(&s).unwrap();
        assert!(back.same_products(t));
        let bad = r#"{"flavor":"custom","triples":[[1,2,3]]}"#;
        assert!(serde_json::from_str::<StructureTable>(bad).is_err());
    }
}
