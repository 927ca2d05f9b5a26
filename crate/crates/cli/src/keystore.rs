//! Plaintext TOML key records with hex-encoded fields.
//!
//! There is no encryption at rest; these files are meant for experiments.

use std::fs;
use std::path::Path;

use ibs_core::curve::{Curve, Group, Point};
use ibs_core::schemes::{MasterSecret, PublicParams, UserKey};
use serde::{Deserialize, Serialize};

use crate::curves;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    /// The PKG: holds `x`.
    Master,
    /// One extracted identity key.
    User,
    /// Only what a verifier needs.
    Public,
}

/// One file on disk. `master_public` (`P1`) is present in every role so any
/// record can serve as `--params` for verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeystoreRecord {
    pub role: Role,
    pub curve: String,
    pub master_public: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
    /// `x` for the master, `V_A` for a user.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub secret: Option<String>,
    /// `C_A` for a user.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub public: Option<String>,
}

impl KeystoreRecord {
    pub fn read(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
    }

    pub fn write(&self, path: &Path) -> CliResult<()> {
        let text = toml::to_string(self).map_err(CliError::failure)?;
        fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
    }

    pub fn public_params(&self) -> CliResult<PublicParams> {
        let resolved = curves::resolve(&self.curve)?;
        let d = &resolved.descriptor;
        let (Some(a), Some(b)) = (&d.a, &d.b) else {
            return Err(CliError::Input(format!(
                "curve type {} cannot sign or verify",
                d.curve_type
            )));
        };
        // subgroup membership is checked by `from_public`
        let curve = Curve::new(d.q.clone(), a.clone(), b.clone());
        let bytes = hex::decode(self.master_public.trim())
            .map_err(|e| CliError::input(format!("master_public: {e}")))?;
        let p1 = curve
            .decode_uncompressed(&bytes)
            .map_err(|e| CliError::input(format!("master_public: {e}")))?;
        PublicParams::from_public(d, p1).map_err(CliError::input)
    }

    fn require(&self, role: Role) -> CliResult<()> {
        if self.role == role {
            Ok(())
        } else {
            Err(CliError::Input(format!(
                "expected a {role:?} record, found {:?}",
                self.role
            )))
        }
    }

    fn field<'a>(value: &'a Option<String>, name: &str) -> CliResult<&'a str> {
        value
            .as_deref()
            .ok_or_else(|| CliError::Input(format!("record has no `{name}` field")))
    }

    pub fn master(reference: &str, params: &PublicParams, msk: &MasterSecret) -> Self {
        Self {
            role: Role::Master,
            curve: reference.to_string(),
            master_public: hex::encode(params.group().encode_point(params.p1())),
            identity: None,
            secret: Some(hex::encode(msk.to_bytes())),
            public: None,
        }
    }

    pub fn public_only(&self) -> Self {
        Self {
            role: Role::Public,
            curve: self.curve.clone(),
            master_public: self.master_public.clone(),
            identity: None,
            secret: None,
            public: None,
        }
    }

    pub fn user(reference: &str, params: &PublicParams, key: &UserKey) -> CliResult<Self> {
        let identity = String::from_utf8(key.identity.clone())
            .map_err(|_| CliError::Input("identity must be UTF-8".into()))?;
        let group = params.group();
        Ok(Self {
            role: Role::User,
            curve: reference.to_string(),
            master_public: hex::encode(group.encode_point(params.p1())),
            identity: Some(identity),
            secret: Some(hex::encode(group.encode_point(&key.v_a))),
            public: Some(hex::encode(group.encode_point(&key.c_a))),
        })
    }

    pub fn load_master(&self) -> CliResult<(MasterSecret, PublicParams)> {
        self.require(Role::Master)?;
        let params = self.public_params()?;
        let bytes = hex::decode(Self::field(&self.secret, "secret")?)
            .map_err(|e| CliError::input(format!("secret: {e}")))?;
        let msk = MasterSecret::from_bytes(&bytes, &params).map_err(CliError::input)?;
        Ok((msk, params))
    }

    /// Loads a user key and checks `e(V_A, g2) = e(C_A, P2)`.
    pub fn load_user(&self) -> CliResult<(UserKey, PublicParams)> {
        self.require(Role::User)?;
        let params = self.public_params()?;
        let group = params.group();
        let key = UserKey {
            identity: Self::field(&self.identity, "identity")?.as_bytes().to_vec(),
            c_a: decode_point(group, Self::field(&self.public, "public")?, "public")?,
            v_a: decode_point(group, Self::field(&self.secret, "secret")?, "secret")?,
        };
        if !key.is_consistent(&params).map_err(CliError::input)? {
            return Err(CliError::Input(
                "user key fails the pairing consistency check".into(),
            ));
        }
        Ok((key, params))
    }
}

fn decode_point(group: &Group, text: &str, name: &str) -> CliResult<Point> {
    let bytes = hex::decode(text.trim()).map_err(|e| CliError::input(format!("{name}: {e}")))?;
    group
        .decode_point(&bytes)
        .map_err(|e| CliError::input(format!("{name}: {e}")))
}
