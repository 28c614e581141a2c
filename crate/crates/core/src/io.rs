//! Instance and certificate files.
//!
//! An instance file starts with a header line
//! `kind=<tag> flip=<tag> [n=<int>] [k=<int>]` followed by one object per
//! line. Lines starting with `#` and blank lines are ignored. A certificate
//! file is one line of space-separated 1-based indices.

use std::path::Path;

use crate::error::{Error, Result};
use crate::flips::FlipFamily;
use crate::objects::{parse_object_sized, Certificate, Instance, Kind, Object};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Header {
    pub kind: Kind,
    pub flip: FlipFamily,
    pub n: Option<usize>,
    pub k: Option<usize>,
}

impl Header {
    pub fn parse(line: &str) -> Result<Header> {
        let (mut kind, mut flip, mut n, mut k) = (None, None, None, None);
        for field in line.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::MalformedText(format!("header field `{field}`")))?;
            let int = || {
                value
                    .parse::<usize>()
                    .map_err(|_| Error::MalformedText(format!("header field `{field}`")))
            };
            match key {
                "kind" => kind = Some(value.parse::<Kind>()?),
                "flip" => flip = Some(value.parse::<FlipFamily>()?),
                "n" => n = Some(int()?),
                "k" => k = Some(int()?),
                _ => return Err(Error::MalformedText(format!("unknown header key `{key}`"))),
            }
        }
        match (kind, flip) {
            (Some(kind), Some(flip)) => Ok(Header { kind, flip, n, k }),
            _ => Err(Error::MalformedText(format!("header `{line}` needs kind= and flip="))),
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Parses an instance, optionally replacing the header's flip family.
pub fn parse_instance_with_flip(text: &str, flip: Option<FlipFamily>) -> Result<Instance> {
    let mut lines = content_lines(text);
    let header = Header::parse(lines.next().ok_or_else(|| Error::MalformedText("empty instance file".into()))?)?;
    let objects = lines
        .map(|l| parse_object_sized(header.kind, l, header.n))
        .collect::<Result<Vec<_>>>()?;
    for o in &objects {
        check_declared_sizes(&header, o)?;
    }
    Instance::new(header.kind, flip.unwrap_or(header.flip), objects)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    parse_instance_with_flip(text, None)
}

fn check_declared_sizes(header: &Header, object: &Object) -> Result<()> {
    let (size, weight) = object.size_signature();
    if let Some(n) = header.n {
        if header.kind != Kind::Tuple && size != n {
            return Err(Error::MixedSizes(format!("{object} does not have size n={n}")));
        }
    }
    if let (Some(k), Object::Combo(_)) = (header.k, object) {
        if weight != k {
            return Err(Error::MixedSizes(format!("{object} does not have weight k={k}")));
        }
    }
    Ok(())
}

pub fn format_header(instance: &Instance) -> String {
    let mut s = format!("kind={} flip={}", instance.kind(), instance.flip());
    if let Some(first) = instance.objects().first() {
        let (size, weight) = first.size_signature();
        if instance.kind() != Kind::Tuple {
            s.push_str(&format!(" n={size}"));
        }
        if instance.kind() == Kind::Combination {
            s.push_str(&format!(" k={weight}"));
        }
    }
    s
}

pub fn format_instance(instance: &Instance) -> String {
    let mut s = format_header(instance);
    s.push('\n');
    for o in instance.objects() {
        s.push_str(&o.to_string());
        s.push('\n');
    }
    s
}

pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let mut lines = content_lines(text);
    let cert = lines.next().unwrap_or("").parse()?;
    if lines.next().is_some() {
        return Err(Error::MalformedText("certificate must be a single line".into()));
    }
    Ok(cert)
}

pub fn format_certificate(certificate: &Certificate) -> String {
    format!("{certificate}\n")
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance> {
    parse_instance(&std::fs::read_to_string(path)?)
}

pub fn write_instance(path: impl AsRef<Path>, instance: &Instance) -> Result<()> {
    Ok(std::fs::write(path, format_instance(instance))?)
}

pub fn read_certificate(path: impl AsRef<Path>) -> Result<Certificate> {
    parse_certificate(&std::fs::read_to_string(path)?)
}

pub fn write_certificate(path: impl AsRef<Path>, certificate: &Certificate) -> Result<()> {
    Ok(std::fs::write(path, format_certificate(certificate))?)
}
