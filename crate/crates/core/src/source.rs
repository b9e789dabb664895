//! Form sources: builder strings such as `psi:24`, inline JSON, or a path to
//! a JSON file.

use std::path::Path;

use crate::chebyshev::{
    t_form, t_roots, u_form, u_roots, u_tilde, u_tilde_roots, v_tilde, v_tilde_roots,
};
use crate::error::{Error, Result};
use crate::expected::Family;
use crate::form::BinaryForm;
use crate::roots::ProjRoot;
use crate::trig::{pi_form, pi_roots, psi_form, psi_roots};

/// A resolved form together with its family, when it came from a builder.
#[derive(Clone, Debug)]
pub struct FormSource {
    pub label: String,
    pub form: BinaryForm,
    pub family: Option<(Family, u64)>,
}

impl FormSource {
    pub fn from_family(family: Family, n: u64) -> Result<Self> {
        let k = n as usize;
        let positive = || {
            if n == 0 {
                Err(Error::InvalidArgument(format!("{family}:{n} needs a positive index")))
            } else {
                Ok(())
            }
        };
        let form = match family {
            Family::Psi => {
                positive()?;
                psi_form(n)
            }
            Family::Pi => pi_form(n)?,
            Family::T => {
                positive()?;
                t_form(k)
            }
            Family::U => {
                positive()?;
                u_form(k)
            }
            Family::UTilde => u_tilde(k)?,
            Family::VTilde => v_tilde(k)?,
        };
        Ok(FormSource { label: format!("{family}:{n}"), form, family: Some((family, n)) })
    }

    /// Roots from their closed forms, for builder sources.
    pub fn closed_roots(&self, prec: u32) -> Option<Vec<ProjRoot>> {
        let (family, n) = self.family?;
        let k = n as usize;
        Some(match family {
            Family::Psi => psi_roots(n, prec),
            Family::Pi => pi_roots(n, prec).ok()?,
            Family::T => t_roots(k, prec),
            Family::U => u_roots(k, prec),
            Family::UTilde => u_tilde_roots(k, prec),
            Family::VTilde => v_tilde_roots(k, prec),
        })
    }
}

/// Resolves `spec` as a builder, inline JSON, or JSON file path, in that
/// order.
pub fn parse_source(spec: &str) -> Result<FormSource> {
    let spec = spec.trim();
    if let Some((name, index)) = spec.split_once(':') {
        if let Ok(family) = name.parse::<Family>() {
            let n: u64 = index
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad index in {spec:?}")))?;
            return FormSource::from_family(family, n);
        }
    }
    if spec.starts_with('{') {
        let form: BinaryForm = serde_json::from_str(spec)?;
        return Ok(FormSource { label: "inline".into(), form, family: None });
    }
    let path = Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        let form: BinaryForm = serde_json::from_str(&text)?;
        return Ok(FormSource { label: spec.to_string(), form, family: None });
    }
    Err(Error::Parse(format!(
        "{spec:?} is neither a builder (psi:N, pi:N, T:N, U:N, utilde:N, vtilde:N), JSON, nor a file"
    )))
}
