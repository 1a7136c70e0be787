#include "grs/data.hpp"

#include <cstdlib>

#ifndef GRS_DATA_DIR_DEFAULT
#define GRS_DATA_DIR_DEFAULT "data"
#endif

namespace grs {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("GRS_DATA_DIR"); env && *env) return env;
  return GRS_DATA_DIR_DEFAULT;
}

std::filesystem::path psl33_table_path() { return data_dir() / "psl33.tbl"; }

std::filesystem::path oracle_cache_dir() { return data_dir() / "oracle"; }

}  // namespace grs
