use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use spectradim::graph::{parse_edge_list, parse_matrix_market, Parsed};
use spectradim::Result;

use crate::args::{Format, InputArgs};

const MM_BANNER: &str = "%%MatrixMarket";

/// Reads a graph file, picking the parser from `--format`, the `.mtx`
/// extension, or a Matrix Market banner on the first line.
pub fn load_graph(path: &Path, args: &InputArgs) -> Result<Parsed> {
    let mut reader = BufReader::new(File::open(path)?);
    let matrix_market = match args.format {
        Format::Mtx => true,
        Format::Edgelist => false,
        Format::Auto => {
            path.extension().is_some_and(|e| e.eq_ignore_ascii_case("mtx"))
                || sniff_banner(&mut reader)?
        }
    };
    let options = args.parse_options();
    if matrix_market {
        parse_matrix_market(reader, options)
    } else {
        parse_edge_list(reader, options)
    }
}

fn sniff_banner<R: Read>(reader: &mut BufReader<R>) -> Result<bool> {
    let buf = reader.fill_buf()?;
    Ok(buf.starts_with(MM_BANNER.as_bytes()))
}
