#include <exception>
#include <iostream>

#include "spinform_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace spinform::cli;
  try {
    const RunConfig cfg = parse_command_line(argc, argv);
    const Report report = run(cfg);
    const std::string text = to_json(report).dump(2) + "\n";
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      write_text(cfg.out, text);
    }
    return exit_code(report);
  } catch (const HelpRequested& h) {
    std::cout << h.what();
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "spinform: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "spinform: " << e.what() << '\n';
    return 2;
  }
}
