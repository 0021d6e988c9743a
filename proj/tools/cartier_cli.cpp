#include <iostream>

#include <CLI11.hpp>

#include "cartier/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for Cartier algebras: F-purity, test ideals, "
               "and F-jumping numbers over F_p"};
  app.get_formatter()->column_width(34);

  std::string task;
  std::string config_path;
  std::optional<unsigned> e_cap;
  std::optional<unsigned> resolution;
  std::optional<std::size_t> word_limit;

  app.add_option("task", task,
                 "underline | fpure | tau | tau-nonreduced | fregular | jumps "
                 "| fpt | skoda | oracle-nu | oracle-monomial-tau | "
                 "oracle-closed-ideals (defaults to task.name in the config)");
  app.add_option("--config", config_path, "job config file")->required();
  app.add_option("--e-cap", e_cap, "override task.e_cap");
  app.add_option("--resolution", resolution, "override task.resolution (E)");
  app.add_option("--word-limit", word_limit, "override task.word_limit");

  CLI11_PARSE(app, argc, argv);

  cartier::JobConfig cfg;
  try {
    cfg = cartier::load_config(config_path);
  } catch (const cartier::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cartier::exit_code_for(e.kind());
  }
  if (!task.empty()) cfg.task = task;
  if (e_cap) cfg.e_cap = *e_cap;
  if (resolution) cfg.resolution = *resolution;
  if (word_limit) cfg.word_limit = *word_limit;

  cartier::RunResult result = cartier::run_job(cfg);
  if (result.exit_code == 0)
    std::cout << result.report;
  else
    std::cerr << result.report;
  return result.exit_code;
}
