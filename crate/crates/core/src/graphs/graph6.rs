//! graph6 codec. Header byte is 63 + n for n <= 62; larger orders use '~'
//! followed by three bytes holding n in 18 bits. The body is the upper
//! triangle in column-major order (pairs (0,1), (0,2), (1,2), (0,3), ...),
//! packed six bits per byte most-significant first, zero padded, each byte
//! offset by 63. The parser is strict: every byte must lie in 63..=126,
//! padding bits must be zero, and trailing bytes are rejected.

use super::{Graph, GraphError, MAX_VERTICES};

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::with_capacity(4 + n * (n - 1) / 12 + 1);
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        bytes.push(126);
        bytes.push(63 + (n >> 12 & 63) as u8);
        bytes.push(63 + (n >> 6 & 63) as u8);
        bytes.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(bytes).expect("graph6 output is ASCII by construction")
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let b = text.as_bytes();
    if b.is_empty() {
        return Err(GraphError::EmptyGraph6);
    }
    let (n, header_len) = if b[0] == b'~' {
        if b.len() >= 2 && b[1] == b'~' {
            // the 8-byte form encodes orders far past what Graph stores
            return Err(GraphError::Graph6OrderUnsupported);
        }
        if b.len() < 4 {
            return Err(GraphError::Graph6Truncated {
                expected: 4,
                got: b.len(),
            });
        }
        for (k, &c) in b[1..4].iter().enumerate() {
            if !(63..=126).contains(&c) {
                return Err(GraphError::BadGraph6Char { pos: 1 + k, byte: c });
            }
        }
        let n = ((b[1] - 63) as usize) << 12 | ((b[2] - 63) as usize) << 6 | (b[3] - 63) as usize;
        (n, 4)
    } else if (63..=125).contains(&b[0]) {
        ((b[0] - 63) as usize, 1)
    } else {
        return Err(GraphError::BadGraph6Header { byte: b[0] });
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::OrderOutOfRange {
            n,
            max: MAX_VERTICES,
        });
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let expected = header_len + nbytes;
    if b.len() < expected {
        return Err(GraphError::Graph6Truncated {
            expected,
            got: b.len(),
        });
    }
    if b.len() > expected {
        return Err(GraphError::Graph6TrailingBytes {
            extra: b.len() - expected,
        });
    }
    for (k, &c) in b[header_len..].iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(GraphError::BadGraph6Char {
                pos: header_len + k,
                byte: c,
            });
        }
    }
    let mut g = Graph::new(n);
    let mut t = 0usize;
    for j in 1..n {
        for i in 0..j {
            if (b[header_len + t / 6] - 63) >> (5 - t % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            t += 1;
        }
    }
    while t < nbytes * 6 {
        if (b[header_len + t / 6] - 63) >> (5 - t % 6) & 1 == 1 {
            return Err(GraphError::Graph6Padding);
        }
        t += 1;
    }
    Ok(g)
}
