//! Line-oriented `[section name]` / `key = value` text with `#` comments.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub key: String,
    pub value: String,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Section {
    pub kind: String,
    pub name: Option<String>,
    pub line: usize,
    pub entries: Vec<Entry>,
}

impl Section {
    pub fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.key == key)
    }

    pub fn all<'a>(&'a self, key: &'a str) -> impl Iterator<Item = &'a Entry> + 'a {
        self.entries.iter().filter(move |e| e.key == key)
    }

    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => format!("[{} {}]", self.kind, n),
            None => format!("[{}]", self.kind),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub origin: String,
    /// Entries before the first section.
    pub header: Vec<Entry>,
    pub sections: Vec<Section>,
}

impl Document {
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let mut header = Vec::new();
        let mut sections: Vec<Section> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if content.is_empty() {
                continue;
            }
            if let Some(rest) = content.strip_prefix('[') {
                let inner = rest
                    .strip_suffix(']')
                    .ok_or_else(|| Error::parse(origin, line, "section", "missing closing `]`"))?
                    .trim();
                let (kind, name) = match inner.split_once(char::is_whitespace) {
                    Some((k, n)) => (k.to_string(), Some(n.trim().to_string())),
                    None => (inner.to_string(), None),
                };
                if kind.is_empty() {
                    return Err(Error::parse(origin, line, "section", "empty section header"));
                }
                sections.push(Section {
                    kind,
                    name,
                    line,
                    entries: Vec::new(),
                });
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| Error::parse(origin, line, content, "expected `key = value`"))?;
            let key = key.trim();
            if key.is_empty() {
                return Err(Error::parse(origin, line, "key", "empty key"));
            }
            let entry = Entry {
                key: key.to_string(),
                value: value.trim().to_string(),
                line,
            };
            match sections.last_mut() {
                Some(s) => s.entries.push(entry),
                None => header.push(entry),
            }
        }
        Ok(Self {
            origin: origin.to_string(),
            header,
            sections,
        })
    }

    pub fn header_value(&self, key: &str) -> Option<&Entry> {
        self.header.iter().find(|e| e.key == key)
    }

    /// Checks `format = <expected> <version>`.
    pub fn expect_format(&self, expected: &str, version: u32) -> Result<()> {
        let entry = self
            .header_value("format")
            .ok_or_else(|| Error::parse(&self.origin, 1, "format", format!("missing `format = {expected} {version}` header")))?;
        let want = format!("{expected} {version}");
        if entry.value.split_whitespace().collect::<Vec<_>>().join(" ") != want {
            return Err(Error::parse(
                &self.origin,
                entry.line,
                "format",
                format!("expected `{want}`, found `{}`", entry.value),
            ));
        }
        Ok(())
    }

    pub fn err(&self, line: usize, field: impl Into<String>, message: impl Into<String>) -> Error {
        Error::parse(&self.origin, line, field, message)
    }

    /// Rejects keys outside `allowed` and repeated keys not in `repeatable`.
    pub fn check_keys(&self, section: &Section, allowed: &[&str], repeatable: &[&str]) -> Result<()> {
        for (i, e) in section.entries.iter().enumerate() {
            if !allowed.contains(&e.key.as_str()) {
                return Err(self.err(e.line, &e.key, format!("unknown key in {}", section.label())));
            }
            if !repeatable.contains(&e.key.as_str()) && section.entries[..i].iter().any(|o| o.key == e.key) {
                return Err(self.err(e.line, &e.key, format!("duplicate key in {}", section.label())));
            }
        }
        Ok(())
    }

    pub fn require<'a>(&self, section: &'a Section, key: &str) -> Result<&'a Entry> {
        section
            .get(key)
            .ok_or_else(|| self.err(section.line, key, format!("missing in {}", section.label())))
    }

    pub fn number(&self, entry: &Entry) -> Result<f64> {
        parse_number(&self.origin, entry.line, &entry.key, &entry.value)
    }

    pub fn number_opt(&self, section: &Section, key: &str) -> Result<Option<f64>> {
        section.get(key).map(|e| self.number(e)).transpose()
    }

    pub fn number_req(&self, section: &Section, key: &str) -> Result<f64> {
        self.number(self.require(section, key)?)
    }
}

/// Finite decimal number; unit suffixes are rejected.
pub fn parse_number(origin: &str, line: usize, field: &str, text: &str) -> Result<f64> {
    let v: f64 = text
        .trim()
        .parse()
        .map_err(|_| Error::parse(origin, line, field, format!("expected a number, found `{text}`")))?;
    if !v.is_finite() {
        return Err(Error::parse(origin, line, field, format!("number must be finite, found `{text}`")));
    }
    Ok(v)
}

/// Leading word and `key=value` pairs of an entry.
pub type SplitArgs<'a> = (Option<&'a str>, Vec<(&'a str, &'a str)>);

/// Splits `word k=v k=v` into the leading word and its named arguments.
pub fn split_args<'a>(origin: &str, entry: &'a Entry) -> Result<SplitArgs<'a>> {
    let mut positional = None;
    let mut named: Vec<(&str, &str)> = Vec::new();
    for tok in entry.value.split_whitespace() {
        match tok.split_once('=') {
            Some((k, v)) => {
                if named.iter().any(|(o, _)| *o == k) {
                    return Err(Error::parse(origin, entry.line, format!("{}.{k}", entry.key), "given twice"));
                }
                named.push((k, v));
            }
            None if positional.is_none() && named.is_empty() => positional = Some(tok),
            None => {
                return Err(Error::parse(
                    origin,
                    entry.line,
                    &entry.key,
                    format!("unexpected token `{tok}`"),
                ))
            }
        }
    }
    Ok((positional, named))
}
