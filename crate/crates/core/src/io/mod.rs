//! Text codecs and drawings.

pub mod codec;
pub mod render;

pub use codec::{encode, parse_index_list, parse_path_code, parse_record};
pub use render::{render, RenderFormat, RenderSpec};
