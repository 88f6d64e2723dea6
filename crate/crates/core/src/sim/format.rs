//! Line-oriented itinerary text: `MOVE <rational>`, `EAT`, `PICKUP <n>`,
//! `DROP <n>`, one per line. `#` starts a comment; blank lines are ignored.

use std::fmt::Write;

use super::Event;
use crate::error::{Error, Result};

pub fn parse_itinerary(text: &str) -> Result<Vec<Event>> {
    let mut events = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}: {raw:?}", lineno + 1));
        let mut words = line.split_whitespace();
        let op = words.next().unwrap_or_default().to_ascii_uppercase();
        let arg = words.next();
        if words.next().is_some() {
            return Err(err("trailing tokens"));
        }
        let count = |arg: Option<&str>| -> Result<u32> {
            arg.ok_or_else(|| err("missing count"))?
                .parse::<u32>()
                .map_err(|_| err("count must be a whole number"))
        };
        let event = match op.as_str() {
            "MOVE" => Event::Move(
                arg.ok_or_else(|| err("missing distance"))?
                    .parse()
                    .map_err(|_| err("bad distance"))?,
            ),
            "EAT" if arg.is_none() => Event::Eat,
            "EAT" => return Err(err("EAT takes no argument")),
            "PICKUP" => Event::Pickup(count(arg)?),
            "DROP" => Event::Drop(count(arg)?),
            _ => return Err(err("unknown event")),
        };
        events.push(event);
    }
    Ok(events)
}

pub fn format_itinerary(events: &[Event]) -> String {
    let mut out = String::new();
    for event in events {
        match event {
            Event::Move(d) => writeln!(out, "MOVE {d}"),
            Event::Eat => writeln!(out, "EAT"),
            Event::Pickup(n) => writeln!(out, "PICKUP {n}"),
            Event::Drop(n) => writeln!(out, "DROP {n}"),
        }
        .expect("writing to a String");
    }
    out
}
