#pragma once

#include <filesystem>

namespace grs {

/// $GRS_DATA_DIR if set, else the data directory the build was configured with.
std::filesystem::path data_dir();

/// data_dir()/psl33.tbl
std::filesystem::path psl33_table_path();

/// data_dir()/oracle
std::filesystem::path oracle_cache_dir();

}  // namespace grs
