use std::fmt;
use std::str::FromStr;

use super::{CodecError, TRUNCATED_HASH_BYTES};
use crate::curve::{shipped, CurveDescriptor, ElementSizes};

/// A SHA-256 challenge before shortening.
pub const FULL_HASH_BYTES: usize = 32;

/// The seven signature shapes in the size tables. The last two have no
/// executable implementation; only their sizes are modelled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SizeScheme {
    Sok,
    Paterson,
    SkElGamal,
    SkSchnorr,
    XunYi,
    ChaCheon,
    PatersonSchuldt,
}

impl SizeScheme {
    pub const ALL: [SizeScheme; 7] = [
        SizeScheme::Sok,
        SizeScheme::Paterson,
        SizeScheme::SkElGamal,
        SizeScheme::SkSchnorr,
        SizeScheme::XunYi,
        SizeScheme::ChaCheon,
        SizeScheme::PatersonSchuldt,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SizeScheme::Sok => "sok",
            SizeScheme::Paterson => "paterson",
            SizeScheme::SkElGamal => "sk_elgamal",
            SizeScheme::SkSchnorr => "sk_schnorr",
            SizeScheme::XunYi => "xunyi",
            SizeScheme::ChaCheon => "cha_cheon",
            SizeScheme::PatersonSchuldt => "paterson_schuldt",
        }
    }

    /// Uncompressed payload bytes.
    pub fn uncompressed(self, sizes: &ElementSizes) -> usize {
        match self {
            SizeScheme::Sok | SizeScheme::Paterson | SizeScheme::SkElGamal => sizes.g2 + sizes.g1,
            SizeScheme::SkSchnorr => FULL_HASH_BYTES + sizes.g1,
            SizeScheme::XunYi | SizeScheme::ChaCheon => 2 * sizes.g1,
            SizeScheme::PatersonSchuldt => 3 * sizes.g1,
        }
    }

    /// Payload bytes with every G1 point compressed and the Schnorr challenge
    /// truncated. G2 elements stay as they are.
    pub fn compressed(self, sizes: &ElementSizes, compressed_g1: usize) -> usize {
        match self {
            SizeScheme::Sok | SizeScheme::Paterson | SizeScheme::SkElGamal => {
                sizes.g2 + compressed_g1
            }
            SizeScheme::SkSchnorr => TRUNCATED_HASH_BYTES + compressed_g1,
            SizeScheme::XunYi | SizeScheme::ChaCheon => 2 * compressed_g1,
            SizeScheme::PatersonSchuldt => 3 * compressed_g1,
        }
    }
}

impl fmt::Display for SizeScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SizeScheme {
    type Err = CodecError;

    /// Accepts the tag with `_` or `-` separators, in any case.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        SizeScheme::ALL
            .into_iter()
            .find(|scheme| scheme.tag() == norm)
            .ok_or_else(|| CodecError::UnknownScheme(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeRow {
    pub scheme: SizeScheme,
    pub curve: String,
    pub uncompressed: usize,
    pub compressed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSizeRow {
    pub curve: String,
    pub sizes: ElementSizes,
    pub q_bits: u64,
    pub r_bits: u64,
}

/// One row per `(scheme, curve)` pair, schemes outermost.
pub fn size_report(curves: &[(&str, &CurveDescriptor)], schemes: &[SizeScheme]) -> Vec<SizeRow> {
    let mut rows = Vec::with_capacity(curves.len() * schemes.len());
    for &scheme in schemes {
        for (name, descriptor) in curves {
            let sizes = descriptor.element_sizes();
            rows.push(SizeRow {
                scheme,
                curve: name.to_string(),
                uncompressed: scheme.uncompressed(&sizes),
                compressed: scheme.compressed(&sizes, descriptor.compressed_g1_bytes()),
            });
        }
    }
    rows
}

/// Resolves bundled curve names and scheme tags, then reports. `all` selects
/// every signature-table curve or every scheme.
pub fn size_report_by_name(curves: &[&str], schemes: &[&str]) -> Result<Vec<SizeRow>, CodecError> {
    let curve_names: Vec<&str> = if curves.contains(&"all") {
        shipped::SIGNATURE_TABLE_CURVES.to_vec()
    } else {
        curves.to_vec()
    };
    let resolved = curve_names
        .iter()
        .map(|name| {
            shipped::by_name(name)
                .map(|d| (*name, d))
                .ok_or_else(|| CodecError::UnknownCurve(name.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let schemes = if schemes.contains(&"all") {
        SizeScheme::ALL.to_vec()
    } else {
        schemes
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(size_report(&resolved, &schemes))
}

pub fn element_size_table(curves: &[(&str, &CurveDescriptor)]) -> Vec<ElementSizeRow> {
    curves
        .iter()
        .map(|(name, d)| ElementSizeRow {
            curve: name.to_string(),
            sizes: d.element_sizes(),
            q_bits: d.q_bits(),
            r_bits: d.r_bits(),
        })
        .collect()
}

/// Aligned grid, schemes down and curves across. With `compressed` each cell
/// reads `uncompressed/compressed`.
pub fn format_table(rows: &[SizeRow], compressed: bool) -> String {
    let mut schemes: Vec<SizeScheme> = Vec::new();
    let mut curves: Vec<&str> = Vec::new();
    for row in rows {
        if !schemes.contains(&row.scheme) {
            schemes.push(row.scheme);
        }
        if !curves.contains(&row.curve.as_str()) {
            curves.push(&row.curve);
        }
    }
    let cell = |scheme: SizeScheme, curve: &str| -> String {
        rows.iter()
            .find(|r| r.scheme == scheme && r.curve == curve)
            .map(|r| {
                if compressed {
                    format!("{}/{}", r.uncompressed, r.compressed)
                } else {
                    r.uncompressed.to_string()
                }
            })
            .unwrap_or_else(|| "-".into())
    };

    let mut grid = vec![std::iter::once("scheme".to_string())
        .chain(curves.iter().map(|c| c.to_string()))
        .collect::<Vec<_>>()];
    for &scheme in &schemes {
        grid.push(
            std::iter::once(scheme.tag().to_string())
                .chain(curves.iter().map(|c| cell(scheme, c)))
                .collect(),
        );
    }
    render(&grid)
}

/// `scheme,curve,uncompressed,compressed` with a header line.
pub fn format_csv(rows: &[SizeRow]) -> String {
    let mut out = String::from("scheme,curve,uncompressed,compressed\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.scheme, r.curve, r.uncompressed, r.compressed
        ));
    }
    out
}

pub fn format_element_table(rows: &[ElementSizeRow]) -> String {
    let mut grid = vec![["curve", "Zr", "G1", "G2", "GT", "bits q/r"]
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()];
    for r in rows {
        grid.push(vec![
            r.curve.clone(),
            r.sizes.zr.to_string(),
            r.sizes.g1.to_string(),
            r.sizes.g2.to_string(),
            r.sizes.gt.to_string(),
            format!("{}/{}", r.q_bits, r.r_bits),
        ]);
    }
    render(&grid)
}

fn render(grid: &[Vec<String>]) -> String {
    let cols = grid.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            grid.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in grid {
        let line = row
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if i == 0 {
                    format!("{v:<w$}", w = widths[i])
                } else {
                    format!("{v:>w$}", w = widths[i])
                }
            })
            .collect::<Vec<_>>()
            .join("  ");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
