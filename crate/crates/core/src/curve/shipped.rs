//! The eight parameter files bundled with the crate.

use std::sync::OnceLock;

use super::{CurveDescriptor, CurveError};

/// `(name, file contents)` for every bundled descriptor, in table order.
pub const SHIPPED: &[(&str, &str)] = &[
    ("a", include_str!("../../params/a.properties")),
    ("a1", include_str!("../../params/a1.properties")),
    ("d159", include_str!("../../params/d159.properties")),
    ("d201", include_str!("../../params/d201.properties")),
    ("d224", include_str!("../../params/d224.properties")),
    ("e", include_str!("../../params/e.properties")),
    ("f", include_str!("../../params/f.properties")),
    ("g", include_str!("../../params/g149.properties")),
];

/// The seven curves compared in the signature-size tables (everything but `e`).
pub const SIGNATURE_TABLE_CURVES: &[&str] = &["a", "a1", "d159", "d201", "d224", "f", "g"];

pub fn names() -> impl Iterator<Item = &'static str> {
    SHIPPED.iter().map(|(name, _)| *name)
}

/// Resolves a bundled descriptor by name. `g149`, `a.properties` and similar
/// spellings are accepted.
pub fn by_name(name: &str) -> Option<&'static CurveDescriptor> {
    static CACHE: OnceLock<Vec<CurveDescriptor>> = OnceLock::new();
    let name = name.strip_suffix(".properties").unwrap_or(name);
    let name = if name == "g149" { "g" } else { name };
    let index = SHIPPED.iter().position(|(n, _)| *n == name)?;
    let all = CACHE.get_or_init(|| {
        SHIPPED
            .iter()
            .map(|(n, text)| {
                CurveDescriptor::parse(text)
                    .unwrap_or_else(|e| panic!("bundled descriptor {n} is invalid: {e}"))
            })
            .collect()
    });
    Some(&all[index])
}

pub fn text_by_name(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".properties").unwrap_or(name);
    let name = if name == "g149" { "g" } else { name };
    SHIPPED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Parses every bundled descriptor from scratch.
pub fn load_all() -> Result<Vec<(&'static str, CurveDescriptor)>, CurveError> {
    SHIPPED
        .iter()
        .map(|(name, text)| CurveDescriptor::parse(text).map(|d| (*name, d)))
        .collect()
}
