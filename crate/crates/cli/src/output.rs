use std::io::{self, Write};

use serde::ser::{Serialize, SerializeMap, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Triple,
    Congruum,
    Quadruple,
    Triangle,
    Split,
    Abd,
    Report,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Triple => "triple",
            Kind::Congruum => "congruum",
            Kind::Quadruple => "quadruple",
            Kind::Triangle => "triangle",
            Kind::Split => "split",
            Kind::Abd => "abd",
            Kind::Report => "report",
        }
    }
}

/// One output line: a kind tag plus ordered, string-valued fields. Numbers
/// are always written as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub kind: Kind,
    pub fields: Vec<(&'static str, String)>,
}

impl Record {
    pub fn new(kind: Kind) -> Self {
        Record {
            kind,
            fields: Vec::new(),
        }
    }

    pub fn field(mut self, name: &'static str, value: impl ToString) -> Self {
        self.fields.push((name, value.to_string()));
        self
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.fields.len() + 1))?;
        map.serialize_entry("kind", self.kind.as_str())?;
        for (k, v) in &self.fields {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

pub struct RecordWriter<W: Write> {
    out: W,
    format: Format,
    header: Option<Vec<&'static str>>,
}

impl<W: Write> RecordWriter<W> {
    pub fn new(out: W, format: Format) -> Self {
        RecordWriter {
            out,
            format,
            header: None,
        }
    }

    pub fn write(&mut self, record: &Record) -> io::Result<()> {
        match self.format {
            Format::Jsonl => {
                serde_json::to_writer(&mut self.out, record)?;
                self.out.write_all(b"\n")
            }
            Format::Csv => {
                let names: Vec<&'static str> = record.fields.iter().map(|(k, _)| *k).collect();
                if self.header.as_ref() != Some(&names) {
                    writeln!(self.out, "kind,{}", names.join(","))?;
                    self.header = Some(names);
                }
                let values: Vec<&str> = record.fields.iter().map(|(_, v)| v.as_str()).collect();
                writeln!(self.out, "{},{}", record.kind.as_str(), values.join(","))
            }
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }
}
