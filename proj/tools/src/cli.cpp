#include "pcf/cli.hpp"

#include <algorithm>
#include <vector>

#include "common.hpp"
#include "pcf/io.hpp"

namespace pcf::cli {

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app("Proper conflict-free coloring toolkit", "pcf");
  app.require_subcommand(1, 1);
  register_coloring_commands(app, ctx);
  register_bound_commands(app, ctx);
  register_fractional_commands(app, ctx);
  register_bench_command(app, ctx);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    err << "hypothesis not met: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return ctx.code;
}

}  // namespace pcf::cli
