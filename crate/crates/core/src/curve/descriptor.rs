use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use super::CurveError;
use crate::fieldmath::{byte_width, is_probable_prime, PRIMALITY_ROUNDS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveType {
    A,
    A1,
    D,
    E,
    F,
    G,
}

impl CurveType {
    pub fn tag(self) -> &'static str {
        match self {
            CurveType::A => "a",
            CurveType::A1 => "a1",
            CurveType::D => "d",
            CurveType::E => "e",
            CurveType::F => "f",
            CurveType::G => "g",
        }
    }
}

impl fmt::Display for CurveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CurveType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" => Ok(CurveType::A),
            "a1" => Ok(CurveType::A1),
            "d" => Ok(CurveType::D),
            "e" => Ok(CurveType::E),
            "f" => Ok(CurveType::F),
            "g" => Ok(CurveType::G),
            other => Err(format!("unknown curve type `{other}`")),
        }
    }
}

/// Serialized size in bytes of one element of each group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementSizes {
    pub zr: usize,
    pub g1: usize,
    pub g2: usize,
    pub gt: usize,
}

/// A parsed parameter file.
///
/// `q`, `r` and `h` are normalized across families: type `a1` files name the
/// field prime `p`, the group order `n` and the cofactor `l`. Every other key
/// is kept verbatim in [`aux`](Self::aux).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveDescriptor {
    pub curve_type: CurveType,
    pub q: BigUint,
    pub r: BigUint,
    pub h: BigUint,
    /// Weierstrass coefficients, when the file determines them.
    pub a: Option<BigUint>,
    pub b: Option<BigUint>,
    /// Embedding degree.
    pub k: u32,
    pub aux: BTreeMap<String, BigInt>,
}

const KNOWN_AUX: &[&str] = &[
    "n",
    "exp2",
    "exp1",
    "sign1",
    "sign0",
    "beta",
    "alpha0",
    "alpha1",
    "discriminant",
    "nk",
    "hk",
    "coeff0",
    "coeff1",
    "coeff2",
    "nqr",
];

impl CurveDescriptor {
    /// Parses a parameter file and validates it.
    ///
    /// Type `a` gets full group validation. The other families only get a
    /// primality check on `q`; they are used for size accounting.
    pub fn parse(text: &str) -> Result<Self, CurveError> {
        let mut curve_type = None;
        let mut values: BTreeMap<String, BigInt> = BTreeMap::new();

        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let key = fields.next().expect("non-empty line");
            let value = fields.next().ok_or_else(|| CurveError::Parse {
                line: line_no,
                message: format!("key `{key}` has no value"),
            })?;
            if fields.next().is_some() {
                return Err(CurveError::Parse {
                    line: line_no,
                    message: "expected exactly `key value`".into(),
                });
            }
            if key == "type" {
                if curve_type.is_some() {
                    return Err(CurveError::Parse {
                        line: line_no,
                        message: "duplicate `type` line".into(),
                    });
                }
                curve_type =
                    Some(
                        value
                            .parse::<CurveType>()
                            .map_err(|message| CurveError::Parse {
                                line: line_no,
                                message,
                            })?,
                    );
                continue;
            }
            let number = BigInt::from_str(value).map_err(|_| CurveError::Parse {
                line: line_no,
                message: format!("`{value}` is not a decimal integer"),
            })?;
            if values.insert(key.to_string(), number).is_some() {
                return Err(CurveError::Parse {
                    line: line_no,
                    message: format!("duplicate key `{key}`"),
                });
            }
        }

        let curve_type = curve_type.ok_or(CurveError::Parse {
            line: 0,
            message: "missing `type` line".into(),
        })?;
        let descriptor = Self::assemble(curve_type, values)?;
        descriptor.validate()?;
        Ok(descriptor)
    }

    fn assemble(
        curve_type: CurveType,
        mut values: BTreeMap<String, BigInt>,
    ) -> Result<Self, CurveError> {
        let mut take = |key: &'static str| -> Result<Option<BigUint>, CurveError> {
            match values.remove(key) {
                None => Ok(None),
                Some(v) if v.is_negative() => Err(CurveError::Validation(format!(
                    "`{key}` must be non-negative"
                ))),
                Some(v) => Ok(v.to_biguint()),
            }
        };
        let required = |key: &'static str, v: Option<BigUint>| {
            v.ok_or(CurveError::MissingKey { key, curve_type })
        };

        let (q, r, h, a, b, k);
        match curve_type {
            CurveType::A => {
                q = required("q", take("q")?)?;
                r = required("r", take("r")?)?;
                h = required("h", take("h")?)?;
                a = Some(BigUint::one());
                b = Some(BigUint::zero());
                k = 2;
            }
            CurveType::A1 => {
                q = required("p", take("p")?)?;
                let n = required("n", take("n")?)?;
                h = required("l", take("l")?)?;
                // keep n visible under its own name as well
                values.insert("n".into(), BigInt::from_biguint(Sign::Plus, n.clone()));
                r = n;
                a = Some(BigUint::one());
                b = Some(BigUint::zero());
                k = 2;
            }
            CurveType::D | CurveType::G => {
                q = required("q", take("q")?)?;
                r = required("r", take("r")?)?;
                h = required("h", take("h")?)?;
                a = take("a")?;
                b = take("b")?;
                let declared = required("k", take("k")?)?;
                let expected = if curve_type == CurveType::D { 6u32 } else { 10 };
                if declared != BigUint::from(expected) {
                    return Err(CurveError::Validation(format!(
                        "type {curve_type} curves have embedding degree {expected}, file says {declared}"
                    )));
                }
                k = expected;
            }
            CurveType::E => {
                q = required("q", take("q")?)?;
                r = required("r", take("r")?)?;
                h = take("h")?.unwrap_or_else(|| (&q - 1u32) / &r);
                a = take("a")?;
                b = take("b")?;
                k = 1;
            }
            CurveType::F => {
                q = required("q", take("q")?)?;
                r = required("r", take("r")?)?;
                h = BigUint::one();
                a = Some(BigUint::zero());
                b = Some(required("b", take("b")?)?);
                k = 12;
            }
        }

        for key in values.keys() {
            if !KNOWN_AUX.contains(&key.as_str()) {
                return Err(CurveError::Parse {
                    line: 0,
                    message: format!("unknown key `{key}` for type {curve_type}"),
                });
            }
        }

        Ok(Self {
            curve_type,
            q,
            r,
            h,
            a,
            b,
            k,
            aux: values,
        })
    }

    fn validate(&self) -> Result<(), CurveError> {
        if !is_probable_prime(&self.q, PRIMALITY_ROUNDS) {
            return Err(CurveError::Validation("q is not prime".into()));
        }
        if self.r.is_zero() {
            return Err(CurveError::Validation("r must be positive".into()));
        }
        if self.curve_type != CurveType::A {
            return Ok(());
        }

        if &self.q % 4u32 != BigUint::from(3u32) {
            return Err(CurveError::Validation("q must be 3 mod 4".into()));
        }
        let q_plus_one = &self.q + 1u32;
        if !(&q_plus_one % &self.r).is_zero() {
            return Err(CurveError::Validation("r does not divide q + 1".into()));
        }
        if &self.h * &self.r != q_plus_one {
            return Err(CurveError::Validation("h·r differs from q + 1".into()));
        }
        if !is_probable_prime(&self.r, PRIMALITY_ROUNDS) {
            return Err(CurveError::Validation("r is not prime".into()));
        }
        if let Some(solinas) = self.solinas_order() {
            if solinas != BigInt::from_biguint(Sign::Plus, self.r.clone()) {
                return Err(CurveError::Validation(
                    "exp2/exp1/sign1/sign0 disagree with r".into(),
                ));
            }
        }
        Ok(())
    }

    /// `2^exp2 + sign1·2^exp1 + sign0`, when all four keys are present.
    fn solinas_order(&self) -> Option<BigInt> {
        let get = |k: &str| self.aux.get(k);
        let (exp2, exp1, sign1, sign0) = (get("exp2")?, get("exp1")?, get("sign1")?, get("sign0")?);
        let exp2 = u32::try_from(exp2).ok()?;
        let exp1 = u32::try_from(exp1).ok()?;
        Some((BigInt::one() << exp2) + sign1 * (BigInt::one() << exp1) + sign0)
    }

    pub fn q_bits(&self) -> u64 {
        self.q.bits()
    }

    pub fn r_bits(&self) -> u64 {
        self.r.bits()
    }

    /// Bytes per base-field coordinate.
    pub fn field_bytes(&self) -> usize {
        byte_width(&self.q)
    }

    pub fn scalar_bytes(&self) -> usize {
        byte_width(&self.r)
    }

    /// Bytes of a G1 point in `prefix ‖ X` form.
    pub fn compressed_g1_bytes(&self) -> usize {
        self.field_bytes() + 1
    }

    /// Per-group element sizes under the usual encodings: points as `X ‖ Y`,
    /// G2 coordinates in the twist field, GT in `F_{q^k}`.
    pub fn element_sizes(&self) -> ElementSizes {
        let fb = self.field_bytes();
        let twist_degree = match self.curve_type {
            CurveType::A | CurveType::A1 | CurveType::E => 1,
            CurveType::F => 2,
            CurveType::D | CurveType::G => (self.k / 2) as usize,
        };
        ElementSizes {
            zr: self.scalar_bytes(),
            g1: 2 * fb,
            g2: 2 * twist_degree * fb,
            gt: self.k as usize * fb,
        }
    }

    pub fn is_executable(&self) -> bool {
        self.curve_type == CurveType::A
    }

    /// Renders the descriptor in the parameter-file grammar.
    pub fn to_properties(&self) -> String {
        let mut out = format!("type {}\n", self.curve_type);
        let mut line = |k: &str, v: String| {
            out.push_str(k);
            out.push(' ');
            out.push_str(&v);
            out.push('\n');
        };
        match self.curve_type {
            CurveType::A => {
                line("q", self.q.to_string());
                line("h", self.h.to_string());
                line("r", self.r.to_string());
            }
            CurveType::A1 => {
                line("p", self.q.to_string());
                line("n", self.r.to_string());
                line("l", self.h.to_string());
            }
            CurveType::D | CurveType::G => {
                line("q", self.q.to_string());
                if let Some(n) = self.aux.get("n") {
                    line("n", n.to_string());
                }
                line("h", self.h.to_string());
                line("r", self.r.to_string());
                if let Some(a) = &self.a {
                    line("a", a.to_string());
                }
                if let Some(b) = &self.b {
                    line("b", b.to_string());
                }
                line("k", self.k.to_string());
            }
            CurveType::E => {
                line("q", self.q.to_string());
                line("r", self.r.to_string());
                line("h", self.h.to_string());
                if let Some(a) = &self.a {
                    line("a", a.to_string());
                }
                if let Some(b) = &self.b {
                    line("b", b.to_string());
                }
            }
            CurveType::F => {
                line("q", self.q.to_string());
                line("r", self.r.to_string());
                if let Some(b) = &self.b {
                    line("b", b.to_string());
                }
            }
        }
        const ORDERED: &[&str] = &[
            "exp2",
            "exp1",
            "sign1",
            "sign0",
            "beta",
            "alpha0",
            "alpha1",
            "discriminant",
            "nk",
            "hk",
            "coeff0",
            "coeff1",
            "coeff2",
            "nqr",
        ];
        for key in ORDERED {
            if let Some(v) = self.aux.get(*key) {
                line(key, v.to_string());
            }
        }
        out
    }
}

impl FromStr for CurveDescriptor {
    type Err = CurveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOY: &str = "type a\nq 347\nh 12\nr 29\n";

    #[test]
    fn parses_minimal_type_a() {
        let d = CurveDescriptor::parse(TOY).unwrap();
        assert_eq!(d.curve_type, CurveType::A);
        assert_eq!(d.q, BigUint::from(347u32));
        assert_eq!(d.k, 2);
        assert_eq!(d.a, Some(BigUint::one()));
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(
            CurveDescriptor::parse("type a\nq\n"),
            Err(CurveError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            CurveDescriptor::parse("type a\nq 12x\n"),
            Err(CurveError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            CurveDescriptor::parse("q 347\nh 12\nr 29\n"),
            Err(CurveError::Parse { .. })
        ));
        assert!(matches!(
            CurveDescriptor::parse("type z\n"),
            Err(CurveError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            CurveDescriptor::parse("type a\nq 347\nq 347\n"),
            Err(CurveError::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn reports_missing_keys() {
        assert_eq!(
            CurveDescriptor::parse("type a\nq 347\nr 29\n"),
            Err(CurveError::MissingKey {
                key: "h",
                curve_type: CurveType::A
            })
        );
        assert!(matches!(
            CurveDescriptor::parse("type d\nq 347\nr 29\nh 1\n"),
            Err(CurveError::MissingKey { key: "k", .. })
        ));
    }

    #[test]
    fn type_a_validation_failures() {
        // composite q
        assert!(matches!(
            CurveDescriptor::parse("type a\nq 348\nh 12\nr 29\n"),
            Err(CurveError::Validation(_))
        ));
        // r does not divide q + 1
        assert!(matches!(
            CurveDescriptor::parse("type a\nq 347\nh 12\nr 31\n"),
            Err(CurveError::Validation(_))
        ));
        // q = 1 mod 4
        assert!(matches!(
            CurveDescriptor::parse("type a\nq 349\nh 10\nr 35\n"),
            Err(CurveError::Validation(_))
        ));
        // Solinas fields that do not reproduce r
        assert!(matches!(
            CurveDescriptor::parse("type a\nq 347\nh 12\nr 29\nexp2 4\nexp1 3\nsign1 1\nsign0 1\n"),
            Err(CurveError::Validation(_))
        ));
    }

    #[test]
    fn properties_round_trip() {
        let text = "type a\nq 347\nh 12\nr 29\nexp2 5\nexp1 2\nsign1 -1\nsign0 1\n";
        let d = CurveDescriptor::parse(text).unwrap();
        assert_eq!(d.to_properties(), text);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(matches!(
            CurveDescriptor::parse("type a\nq 347\nh 12\nr 29\nwidth 3\n"),
            Err(CurveError::Parse { .. })
        ));
    }
}
