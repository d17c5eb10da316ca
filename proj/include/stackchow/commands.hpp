#pragma once

#include <iosfwd>
#include <string>

#include "stackchow/input.hpp"

namespace stackchow {

struct RenderOptions {
    bool simplify = false;
    int graded_degree = -1;  // -1: no graded table
    RenderFormat format = RenderFormat::text;
    bool skip_fan_check = false;
    bool verbose = false;
};

// Exit codes: 0 success, 1 hypothesis or other mathematical failure,
// 2 malformed input.  Errors go to err, reports and results to out.
int cmd_check(const std::string& path, bool skip_fan_check, std::ostream& out,
              std::ostream& err);
int cmd_chow(const std::string& path, const RenderOptions& options, std::ostream& out,
             std::ostream& err);
int cmd_fantastack(const std::string& path, const RenderOptions& options, std::ostream& out,
                   std::ostream& err);
int cmd_compare(const std::string& path, const std::string& target, int max_degree,
                bool skip_fan_check, std::ostream& out, std::ostream& err);
int cmd_examples(const std::string& name, const std::string& out_path, std::ostream& out,
                 std::ostream& err);

}  // namespace stackchow
