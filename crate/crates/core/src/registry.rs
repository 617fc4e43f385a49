//! Name resolution for umbrae: the built-ins plus user definitions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::umbra::{named, Umbra};

/// Words the expression language reserves for operators.
pub const KEYWORDS: [&str; 8] = ["inv", "cinv", "adj", "d", "dsum", "ddiff", "bar", "fresh"];

/// Names bound to indeterminates rather than umbrae.
pub const INDETERMINATES: [&str; 2] = ["x", "y"];

/// Built-in umbrae are generated on demand to any order; user umbrae carry
/// the finite moment list they were defined with.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    user: BTreeMap<String, Umbra>,
}

impl Registry {
    pub fn new() -> Registry {
        Registry::default()
    }

    pub fn is_reserved(name: &str) -> bool {
        KEYWORDS.contains(&name) || INDETERMINATES.contains(&name) || named::NAMES.contains(&name)
    }

    fn check_name(name: &str) -> Result<()> {
        let mut chars = name.chars();
        let valid = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::Argument(format!("`{name}` is not a valid umbra name")));
        }
        if Registry::is_reserved(name) {
            return Err(Error::Argument(format!("`{name}` is reserved")));
        }
        Ok(())
    }

    /// Adds or replaces a user umbra.
    pub fn define(&mut self, name: &str, umbra: Umbra) -> Result<()> {
        Registry::check_name(name)?;
        self.user.insert(name.to_string(), umbra.with_name(name));
        Ok(())
    }

    pub fn user_umbrae(&self) -> impl Iterator<Item = (&String, &Umbra)> {
        self.user.iter()
    }

    /// Highest order available for `name`: `None` for built-ins (unbounded),
    /// `Some(n)` for user umbrae.
    pub fn available_order(&self, name: &str) -> Result<Option<usize>> {
        if named::NAMES.contains(&name) {
            return Ok(None);
        }
        self.user.get(name).map(|u| Some(u.order())).ok_or_else(|| Error::UnknownUmbra(name.to_string()))
    }

    pub fn resolve(&self, name: &str, order: usize) -> Result<Umbra> {
        if let Some(u) = named::builtin(name, order) {
            return Ok(u);
        }
        let u = self.user.get(name).ok_or_else(|| Error::UnknownUmbra(name.to_string()))?;
        if u.order() < order {
            return Err(Error::InsufficientMoments { name: name.to_string(), available: u.order(), requested: order });
        }
        u.truncate(order)
    }
}
