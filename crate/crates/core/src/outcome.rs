use serde::Serialize;

/// Result of a search that may legitimately come back empty.
///
/// `NotFound` means the search ran to completion without success (for the
/// exact backends this is a proof of absence); `Unknown` means a budget ran
/// out first.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", content = "value", rename_all = "snake_case")]
pub enum Outcome<T> {
    Found(T),
    NotFound(String),
    Unknown(String),
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_found(&self) -> Option<&T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_not_found(&self) -> bool {
        matches!(self, Outcome::NotFound(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Outcome::Unknown(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::NotFound(r) => Outcome::NotFound(r),
            Outcome::Unknown(r) => Outcome::Unknown(r),
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            Outcome::Found(_) => "found",
            Outcome::NotFound(_) => "not_found",
            Outcome::Unknown(_) => "unknown",
        }
    }
}
