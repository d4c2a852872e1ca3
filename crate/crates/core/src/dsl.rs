//! A small text format for a group and named elements of it.
//!
//! ```text
//! group { d:2, r:1, flavor:V, gens:[1 1] }
//!
//! elem a {
//!   minus: ((..).)
//!   braid: 1 -2
//!   labels: g1; e; g1^-1
//!   plus: (.(..))
//! }
//! ```
//!
//! Whitespace is insignificant, `#` starts a comment, and any value may be
//! wrapped in double quotes. An empty braid is written `braid:` or `braid: ""`.

use crate::braid::BraidWord;
use crate::diagram::{Flavor, GroupContext, Spraige};
use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::labeled::{Label, LabelGroupSpec, LabeledBraid};

#[derive(Clone, Debug)]
pub struct Document {
    pub context: GroupContext,
    pub elements: Vec<(String, Spraige)>,
}

impl Document {
    pub fn get(&self, name: &str) -> Option<&Spraige> {
        self.elements
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
    }
}

const FIELDS: [&str; 4] = ["minus", "braid", "labels", "plus"];

struct Source<'a> {
    text: &'a str,
    /// `text` with comments blanked out, same byte offsets.
    clean: String,
}

impl<'a> Source<'a> {
    fn new(text: &'a str) -> Self {
        let mut clean = String::with_capacity(text.len());
        let mut in_quote = false;
        let mut in_comment = false;
        for c in text.chars() {
            if in_comment {
                if c == '\n' {
                    in_comment = false;
                    clean.push(c);
                } else {
                    clean.extend(std::iter::repeat(' ').take(c.len_utf8()));
                }
                continue;
            }
            if c == '"' {
                in_quote = !in_quote;
            } else if c == '#' && !in_quote {
                in_comment = true;
                clean.push(' ');
                continue;
            }
            clean.push(c);
        }
        Source { text, clean }
    }

    fn error(&self, offset: usize, message: impl Into<String>) -> Error {
        let before = &self.text[..offset.min(self.text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(before.len(), |k| before.len() - k - 1) + 1;
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&self, mut pos: usize) -> usize {
        let bytes = self.clean.as_bytes();
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        pos
    }

    fn expect(&self, pos: usize, token: &str) -> Result<usize> {
        let pos = self.skip_ws(pos);
        if self.clean[pos..].starts_with(token) {
            Ok(pos + token.len())
        } else {
            Err(self.error(pos, format!("expected {token:?}")))
        }
    }

    fn ident(&self, pos: usize) -> Result<(usize, &str)> {
        let start = self.skip_ws(pos);
        let end = self.clean[start..]
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .map_or(self.clean.len(), |k| start + k);
        if end == start {
            return Err(self.error(start, "expected a name"));
        }
        Ok((end, &self.clean[start..end]))
    }

    /// The offset just past the `}` closing a block whose body starts at `pos`.
    fn block_end(&self, pos: usize) -> Result<usize> {
        let mut in_quote = false;
        for (k, c) in self.clean[pos..].char_indices() {
            match c {
                '"' => in_quote = !in_quote,
                '}' if !in_quote => return Ok(pos + k),
                _ => {}
            }
        }
        Err(self.error(pos, "unclosed '{'"))
    }
}

fn unquote(value: &str) -> &str {
    let v = value.trim();
    if v.len() >= 2 && v.starts_with('"') && v.ends_with('"') {
        &v[1..v.len() - 1]
    } else {
        v
    }
}

/// Split `text` at top-level occurrences of `sep` (outside quotes and brackets),
/// returning each piece with its offset.
fn split_top(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut in_quote = false;
    let mut depth = 0i32;
    let mut start = 0;
    for (k, c) in text.char_indices() {
        match c {
            '"' => in_quote = !in_quote,
            '[' if !in_quote => depth += 1,
            ']' if !in_quote => depth -= 1,
            c if c == sep && !in_quote && depth == 0 => {
                out.push((start, &text[start..k]));
                start = k + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}

fn parse_header(src: &Source, pos: usize) -> Result<(usize, GroupContext)> {
    let pos = src.expect(pos, "group")?;
    let open = src.expect(pos, "{")?;
    let close = src.block_end(open)?;
    let body = &src.clean[open..close];
    let (mut d, mut r, mut flavor, mut gens) = (None, None, None, None);
    for (off, item) in split_top(body, ',') {
        let at = open + off;
        if item.trim().is_empty() {
            continue;
        }
        let (key, value) = item
            .split_once(':')
            .ok_or_else(|| src.error(at, "expected key:value"))?;
        let value_at = at + key.len() + 1;
        match key.trim() {
            "d" => d = Some(parse_int(src, value_at, value)?),
            "r" => r = Some(parse_int(src, value_at, value)?),
            "flavor" => {
                flavor = Some(
                    Flavor::parse(unquote(value))
                        .ok_or_else(|| src.error(value_at, "flavor must be V, F or T"))?,
                )
            }
            "gens" => gens = Some((value_at, value)),
            other => return Err(src.error(at, format!("unknown group key {other:?}"))),
        }
    }
    let missing = |k: &str| src.error(open, format!("group header is missing {k}"));
    let d = d.ok_or_else(|| missing("d"))?;
    let r = r.ok_or_else(|| missing("r"))?;
    let flavor = flavor.ok_or_else(|| missing("flavor"))?;
    let (gens_at, gens) = gens.ok_or_else(|| missing("gens"))?;
    let inner = gens.trim();
    let inner = inner
        .strip_prefix('[')
        .and_then(|g| g.strip_suffix(']'))
        .ok_or_else(|| src.error(gens_at, "gens must be a [...] list"))?;
    let mut words = Vec::new();
    if !inner.trim().is_empty() {
        for (off, item) in split_top(inner, ',') {
            let word = BraidWord::parse(unquote(item), Some(d))
                .map_err(|e| src.error(gens_at + off, e.to_string()))?;
            words.push(word);
        }
    }
    let wrap = |e: Error| src.error(open, e.to_string());
    let spec = LabelGroupSpec::new(d, words, flavor != Flavor::V).map_err(wrap)?;
    let ctx = GroupContext::new(r, spec, flavor).map_err(wrap)?;
    Ok((close + 1, ctx))
}

fn parse_int(src: &Source, at: usize, value: &str) -> Result<usize> {
    unquote(value)
        .parse()
        .map_err(|_| src.error(at, format!("expected an integer, got {:?}", value.trim())))
}

/// Offsets of field keywords `name:` in an element body.
fn field_positions(body: &str) -> Vec<(usize, usize, &'static str)> {
    let mut out = Vec::new();
    let mut in_quote = false;
    let bytes = body.as_bytes();
    for (k, c) in body.char_indices() {
        if c == '"' {
            in_quote = !in_quote;
        }
        if in_quote || (k > 0 && !bytes[k - 1].is_ascii_whitespace() && bytes[k - 1] != b'"') {
            continue;
        }
        for f in FIELDS {
            if body[k..].starts_with(f) {
                let rest = &body[k + f.len()..];
                let trimmed = rest.trim_start();
                if trimmed.starts_with(':') {
                    let colon = k + f.len() + (rest.len() - trimmed.len()) + 1;
                    out.push((k, colon, f));
                }
            }
        }
    }
    out
}

fn parse_element(src: &Source, pos: usize, ctx: &GroupContext) -> Result<(usize, String, Spraige)> {
    let pos = src.expect(pos, "elem")?;
    let (pos, name) = src.ident(pos)?;
    let name = name.to_string();
    let open = src.expect(pos, "{")?;
    let close = src.block_end(open)?;
    let body = &src.clean[open..close];
    let found = field_positions(body);
    let mut values: [Option<(usize, &str)>; 4] = [None; 4];
    for (n, &(_, colon, f)) in found.iter().enumerate() {
        let end = found.get(n + 1).map_or(body.len(), |x| x.0);
        let slot = FIELDS.iter().position(|x| *x == f).expect("known field");
        if values[slot].is_some() {
            return Err(src.error(open + colon, format!("duplicate field {f}")));
        }
        values[slot] = Some((open + colon, &body[colon..end]));
    }
    if let Some(&(start, _, _)) = found.first() {
        if !body[..start].trim().is_empty() {
            return Err(src.error(open, "unexpected text before the first field"));
        }
    } else if !body.trim().is_empty() {
        return Err(src.error(open, "expected minus:, braid:, labels:, plus:"));
    }
    let get = |k: usize| {
        values[k].ok_or_else(|| src.error(open, format!("element {name} is missing {}", FIELDS[k])))
    };
    let d = ctx.d();
    let (at, v) = get(0)?;
    let minus = Forest::parse(unquote(v), d).map_err(|e| src.error(at, e.to_string()))?;
    let (at, v) = get(3)?;
    let plus = Forest::parse(unquote(v), d).map_err(|e| src.error(at, e.to_string()))?;
    let (at, v) = get(1)?;
    let braid_text = unquote(v);
    let braid = if braid_text.trim_start().starts_with('B') {
        BraidWord::parse(braid_text, None)
    } else {
        BraidWord::parse(braid_text, Some(minus.leaves()))
    }
    .map_err(|e| src.error(at, e.to_string()))?;
    let (at, v) = get(2)?;
    let labels = split_top(unquote(v), ';')
        .into_iter()
        .map(|(off, t)| Label::parse(unquote(t)).map_err(|e| src.error(at + off, e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let wrap = |e: Error| src.error(open, format!("element {name}: {e}"));
    let lb = LabeledBraid::new(braid, labels).map_err(wrap)?;
    let s = Spraige::new(minus, lb, plus).map_err(wrap)?;
    ctx.check_labels_and_flavor(&s).map_err(wrap)?;
    Ok((close + 1, name, s))
}

pub fn parse_document(text: &str) -> Result<Document> {
    let src = Source::new(text);
    let (mut pos, context) = parse_header(&src, 0)?;
    let mut elements: Vec<(String, Spraige)> = Vec::new();
    loop {
        pos = src.skip_ws(pos);
        if pos >= src.clean.len() {
            break;
        }
        let start = pos;
        let (next, name, s) = parse_element(&src, pos, &context)?;
        if elements.iter().any(|(n, _)| *n == name) {
            return Err(src.error(start, format!("element {name} defined twice")));
        }
        elements.push((name, s));
        pos = next;
    }
    Ok(Document { context, elements })
}

/// Parse one `elem` block against a known group.
pub fn parse_element_text(text: &str, ctx: &GroupContext) -> Result<(String, Spraige)> {
    let src = Source::new(text);
    let (pos, name, s) = parse_element(&src, 0, ctx)?;
    if src.skip_ws(pos) < src.clean.len() {
        return Err(src.error(pos, "trailing text after element"));
    }
    Ok((name, s))
}

pub fn print_group(ctx: &GroupContext) -> String {
    let gens: Vec<String> = ctx
        .spec()
        .generators()
        .iter()
        .map(BraidWord::to_string)
        .collect();
    format!(
        "group {{ d:{}, r:{}, flavor:{}, gens:[{}] }}\n",
        ctx.d(),
        ctx.r(),
        ctx.flavor(),
        gens.join(", ")
    )
}

pub fn print_element(name: &str, s: &Spraige) -> String {
    let braid = s.braid().to_string();
    let labels: Vec<String> = s.labels().iter().map(Label::to_string).collect();
    let braid_line = if braid.is_empty() {
        "  braid:\n".to_string()
    } else {
        format!("  braid: {braid}\n")
    };
    format!(
        "elem {name} {{\n  minus: {}\n{braid_line}  labels: {}\n  plus: {}\n}}\n",
        s.minus(),
        labels.join("; "),
        s.plus()
    )
}

pub fn print_document(doc: &Document) -> String {
    let mut out = print_group(&doc.context);
    for (name, s) in &doc.elements {
        out.push('\n');
        out.push_str(&print_element(name, s));
    }
    out
}
