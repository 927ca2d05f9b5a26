use std::fmt;
use std::str::FromStr;

use super::{PublicParams, SchemeError};
use crate::codec::{
    compress_point, decompress_point, CompressedPoint, SizeScheme, TRUNCATED_HASH_BYTES,
};
use crate::curve::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Sok,
    Paterson,
    SkElGamal,
    SkSchnorr,
    XunYi,
}

impl Scheme {
    pub const ALL: [Scheme; 5] = [
        Scheme::Sok,
        Scheme::Paterson,
        Scheme::SkElGamal,
        Scheme::SkSchnorr,
        Scheme::XunYi,
    ];

    pub fn tag(self) -> &'static str {
        self.size_scheme().tag()
    }

    /// Wire tag byte.
    pub fn code(self) -> u8 {
        match self {
            Scheme::Sok => 1,
            Scheme::Paterson => 2,
            Scheme::SkElGamal => 3,
            Scheme::SkSchnorr => 4,
            Scheme::XunYi => 5,
        }
    }

    pub fn from_code(code: u8) -> Option<Self> {
        Scheme::ALL.into_iter().find(|s| s.code() == code)
    }

    pub fn size_scheme(self) -> SizeScheme {
        match self {
            Scheme::Sok => SizeScheme::Sok,
            Scheme::Paterson => SizeScheme::Paterson,
            Scheme::SkElGamal => SizeScheme::SkElGamal,
            Scheme::SkSchnorr => SizeScheme::SkSchnorr,
            Scheme::XunYi => SizeScheme::XunYi,
        }
    }

    /// Whether `part1` is a G1 point (and so compressible). `Z_A` of the
    /// first three schemes lives in G2.
    fn part1_in_g1(self) -> bool {
        self == Scheme::XunYi
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Scheme {
    type Err = SchemeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let size: SizeScheme = s
            .parse()
            .map_err(|_| SchemeError::UnknownScheme(s.to_string()))?;
        Scheme::ALL
            .into_iter()
            .find(|scheme| scheme.size_scheme() == size)
            .ok_or_else(|| SchemeError::UnknownScheme(s.to_string()))
    }
}

/// How the SK-Schnorr challenge is stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum HashMode {
    /// The full 32-byte digest.
    #[default]
    None,
    /// Its last 20 bytes.
    Truncate20,
    /// The digest reduced mod `r`, `ceil(bits(r)/8)` bytes.
    ModR,
}

impl HashMode {
    pub fn code(self) -> u8 {
        match self {
            HashMode::None => 0,
            HashMode::Truncate20 => 1,
            HashMode::ModR => 2,
        }
    }

    pub fn from_code(code: u8) -> Result<Self, SchemeError> {
        match code {
            0 => Ok(HashMode::None),
            1 => Ok(HashMode::Truncate20),
            2 => Ok(HashMode::ModR),
            other => Err(SchemeError::UnknownHashMode(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            HashMode::None => "none",
            HashMode::Truncate20 => "truncate20",
            HashMode::ModR => "mod_r",
        }
    }

    /// Stored challenge width for a group order of `scalar_bytes` bytes.
    pub fn challenge_len(self, scalar_bytes: usize) -> usize {
        match self {
            HashMode::None => 32,
            HashMode::Truncate20 => TRUNCATED_HASH_BYTES,
            HashMode::ModR => scalar_bytes,
        }
    }
}

impl fmt::Display for HashMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HashMode {
    type Err = SchemeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "none" => Ok(HashMode::None),
            "truncate20" => Ok(HashMode::Truncate20),
            "mod_r" | "modr" => Ok(HashMode::ModR),
            _ => Err(SchemeError::UnknownHashMode(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SignOptions {
    pub compress: bool,
    pub hash_mode: HashMode,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignaturePart {
    Point(Point),
    /// SK-Schnorr challenge bytes, already in their stored width.
    Challenge(Vec<u8>),
}

/// `(part1, S)` together with how it is to be serialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub scheme: Scheme,
    pub part1: SignaturePart,
    pub part2: Point,
    pub point_compressed: bool,
    pub hash_mode: HashMode,
}

const LENGTH_PREFIX: usize = 2;

impl Signature {
    /// `Z_A` for every scheme but SK-Schnorr.
    pub fn z_a(&self) -> Option<&Point> {
        match &self.part1 {
            SignaturePart::Point(p) => Some(p),
            SignaturePart::Challenge(_) => None,
        }
    }

    pub fn challenge(&self) -> Option<&[u8]> {
        match &self.part1 {
            SignaturePart::Challenge(c) => Some(c),
            SignaturePart::Point(_) => None,
        }
    }

    pub fn s(&self) -> &Point {
        &self.part2
    }

    fn flags(&self) -> u8 {
        u8::from(self.point_compressed) | (self.hash_mode.code() << 1)
    }

    fn encode_point(
        &self,
        p: &Point,
        compress: bool,
        params: &PublicParams,
    ) -> Result<Vec<u8>, SchemeError> {
        if compress {
            Ok(compress_point(p, params.group().curve())?.to_bytes())
        } else {
            Ok(params.group().encode_point(p))
        }
    }

    /// `(part1, part2)` payload bytes.
    pub fn payload(&self, params: &PublicParams) -> Result<(Vec<u8>, Vec<u8>), SchemeError> {
        let part1 = match &self.part1 {
            SignaturePart::Point(p) => self.encode_point(
                p,
                self.point_compressed && self.scheme.part1_in_g1(),
                params,
            )?,
            SignaturePart::Challenge(c) => c.clone(),
        };
        let part2 = self.encode_point(&self.part2, self.point_compressed, params)?;
        Ok((part1, part2))
    }

    /// Payload bytes only, without tag, flags or length prefixes.
    pub fn payload_len(&self, params: &PublicParams) -> Result<usize, SchemeError> {
        let (a, b) = self.payload(params)?;
        Ok(a.len() + b.len())
    }

    /// `tag ‖ flags ‖ len(part1) ‖ part1 ‖ len(part2) ‖ part2`, lengths as
    /// 2-byte big-endian.
    pub fn to_bytes(&self, params: &PublicParams) -> Result<Vec<u8>, SchemeError> {
        let (part1, part2) = self.payload(params)?;
        let mut out = Vec::with_capacity(2 + 2 * LENGTH_PREFIX + part1.len() + part2.len());
        out.push(self.scheme.code());
        out.push(self.flags());
        for part in [&part1, &part2] {
            let len = u16::try_from(part.len())
                .map_err(|_| SchemeError::MalformedSignature("part exceeds 65535 bytes".into()))?;
            out.extend_from_slice(&len.to_be_bytes());
            out.extend_from_slice(part);
        }
        Ok(out)
    }

    /// Parses the wire format. Points must be on the curve and in the
    /// order-`r` subgroup.
    pub fn from_bytes(bytes: &[u8], params: &PublicParams) -> Result<Self, SchemeError> {
        let malformed = |m: &str| SchemeError::MalformedSignature(m.to_string());
        if bytes.len() < 2 {
            return Err(malformed("truncated header"));
        }
        let scheme = Scheme::from_code(bytes[0])
            .ok_or_else(|| malformed(&format!("unknown scheme tag {}", bytes[0])))?;
        let flags = bytes[1];
        if flags & !0b111 != 0 {
            return Err(malformed("reserved flag bits set"));
        }
        let point_compressed = flags & 1 == 1;
        let hash_mode =
            HashMode::from_code((flags >> 1) & 0b11).map_err(|_| malformed("unknown hash mode"))?;
        if hash_mode != HashMode::None && scheme != Scheme::SkSchnorr {
            return Err(malformed("hash mode set on a scheme without a challenge"));
        }

        let mut rest = &bytes[2..];
        let mut next_part = || -> Result<&[u8], SchemeError> {
            if rest.len() < LENGTH_PREFIX {
                return Err(malformed("truncated length prefix"));
            }
            let len = u16::from_be_bytes([rest[0], rest[1]]) as usize;
            let body = rest
                .get(LENGTH_PREFIX..LENGTH_PREFIX + len)
                .ok_or_else(|| malformed("truncated part"))?;
            rest = &rest[LENGTH_PREFIX + len..];
            Ok(body)
        };
        let raw1 = next_part()?;
        let raw2 = next_part()?;
        if !rest.is_empty() {
            return Err(malformed("trailing bytes"));
        }

        let part1 = if scheme == Scheme::SkSchnorr {
            let expected = hash_mode.challenge_len(params.descriptor().scalar_bytes());
            if raw1.len() != expected {
                return Err(malformed(&format!(
                    "challenge is {} bytes, expected {expected}",
                    raw1.len()
                )));
            }
            SignaturePart::Challenge(raw1.to_vec())
        } else {
            SignaturePart::Point(decode_point(
                raw1,
                point_compressed && scheme.part1_in_g1(),
                params,
            )?)
        };
        let part2 = decode_point(raw2, point_compressed, params)?;
        Ok(Self {
            scheme,
            part1,
            part2,
            point_compressed,
            hash_mode,
        })
    }
}

fn decode_point(
    bytes: &[u8],
    compressed: bool,
    params: &PublicParams,
) -> Result<Point, SchemeError> {
    let group = params.group();
    let malformed = |e: &dyn fmt::Display| SchemeError::MalformedSignature(e.to_string());
    if compressed {
        let c = CompressedPoint::from_bytes(bytes, group.curve().field_bytes())
            .map_err(|e| malformed(&e))?;
        let p = decompress_point(&c, group.curve()).map_err(|e| malformed(&e))?;
        if !group.contains(&p) {
            return Err(malformed(&"point is not in the order-r subgroup"));
        }
        Ok(p)
    } else {
        group.decode_point(bytes).map_err(|e| malformed(&e))
    }
}
