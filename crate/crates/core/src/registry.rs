use crate::error::{Error, Result};

/// Name-keyed collection of interchangeable strategies, kept in registration
/// order.
pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: Vec<(String, Box<T>)>,
}

impl<T: ?Sized> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry { kind, entries: Vec::new() }
    }

    pub fn register(&mut self, name: impl Into<String>, item: Box<T>) -> Result<()> {
        let name = name.into();
        if self.entries.iter().any(|(n, _)| *n == name) {
            return Err(Error::Input(format!("{} `{name}` is already registered", self.kind)));
        }
        self.entries.push((name, item));
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, item)| item.as_ref()).ok_or_else(|| self.unknown(name))
    }

    /// Removes and returns the entry called `name`.
    pub fn take(&mut self, name: &str) -> Result<Box<T>> {
        match self.entries.iter().position(|(n, _)| n == name) {
            Some(i) => Ok(self.entries.remove(i).1),
            None => Err(self.unknown(name)),
        }
    }

    fn unknown(&self, name: &str) -> Error {
        Error::Input(format!("unknown {} `{name}` (available: {})", self.kind, self.names().join(", ")))
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &T)> {
        self.entries.iter().map(|(n, item)| (n.as_str(), item.as_ref()))
    }
}
