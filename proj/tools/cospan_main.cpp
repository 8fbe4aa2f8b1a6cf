// Command-line front end; everything goes through the shared library's C API.

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>

#include "opencospan.h"

namespace {

struct DocumentDeleter {
  void operator()(ocs_document* d) const { ocs_document_free(d); }
};
using DocumentPtr = std::unique_ptr<ocs_document, DocumentDeleter>;

struct StringDeleter {
  void operator()(char* s) const { ocs_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Exit codes: 0 success (or positive query answer), 1 domain error or
// negative query answer, 2 usage error.
constexpr int kOk = 0;
constexpr int kDomainError = 1;

int fail(ocs_status status) {
  std::fprintf(stderr, "%s: %s\n", ocs_status_name(status), ocs_last_error());
  return kDomainError;
}

int load(const std::string& path, DocumentPtr& out) {
  ocs_document* raw = nullptr;
  ocs_status status = ocs_read_file(path.c_str(), &raw);
  if (status != OCS_OK) return fail(status);
  out.reset(raw);
  return kOk;
}

int emit_document(const ocs_document* doc, const std::string& output_path,
                  bool canonical) {
  if (output_path.empty()) {
    StringPtr text;
    char* raw = nullptr;
    ocs_status status = ocs_print(doc, canonical ? 1 : 0, &raw);
    if (status != OCS_OK) return fail(status);
    text.reset(raw);
    std::fputs(text.get(), stdout);
    return kOk;
  }
  ocs_status status =
      ocs_write_file(doc, canonical ? 1 : 0, output_path.c_str());
  if (status != OCS_OK) return fail(status);
  return kOk;
}

struct BinaryArgs {
  std::string first;
  std::string second;
  std::string output;
  bool canonical = false;
};

void add_binary_options(CLI::App* cmd, BinaryArgs& args) {
  cmd->add_option("first", args.first, "first open network (JSON)")->required();
  cmd->add_option("second", args.second, "second open network (JSON)")
      ->required();
  cmd->add_option("-o,--output", args.output, "output path (default: stdout)");
  cmd->add_flag("--canonical", args.canonical,
                "canonicalize the result before printing");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"open networks as structured cospans"};
  app.require_subcommand(1);

  // cospan: generic cell operations
  CLI::App* cospan = app.add_subcommand("cospan", "compose, tensor, compare");
  cospan->require_subcommand(1);

  BinaryArgs compose_args;
  CLI::App* compose_cmd =
      cospan->add_subcommand("compose", "glue two open networks end to end");
  add_binary_options(compose_cmd, compose_args);

  BinaryArgs tensor_args;
  CLI::App* tensor_cmd =
      cospan->add_subcommand("tensor", "place two open networks side by side");
  add_binary_options(tensor_cmd, tensor_args);

  struct {
    std::string first, second;
  } iso_args;
  CLI::App* iso_cmd = cospan->add_subcommand(
      "iso", "decide leg-preserving isomorphism of two open networks");
  iso_cmd->add_option("first", iso_args.first)->required();
  iso_cmd->add_option("second", iso_args.second)->required();

  struct {
    std::size_t size = 0;
    std::string instance = "graph";
    std::string output;
  } id_args;
  CLI::App* id_cmd = cospan->add_subcommand("id", "identity open network");
  id_cmd->add_option("-n,--size", id_args.size, "boundary size")->required();
  id_cmd->add_option("--instance", id_args.instance,
                     "graph | lgraph | petri | petri_rates");
  id_cmd->add_option("-o,--output", id_args.output);

  struct {
    std::string input, output;
  } dot_args;
  CLI::App* dot_cmd =
      cospan->add_subcommand("export-dot", "render an open network as DOT");
  dot_cmd->add_option("input", dot_args.input)->required();
  dot_cmd->add_option("-o,--output", dot_args.output);

  // frobenius
  CLI::App* frobenius = app.add_subcommand("frobenius", "hypergraph structure");
  struct {
    std::string instance = "graph";
    std::size_t size = 1;
  } frob_args;
  CLI::App* frob_check =
      frobenius->add_subcommand("check", "verify the Frobenius laws");
  frob_check->add_option("--instance", frob_args.instance);
  frob_check->add_option("--size", frob_args.size);

  // circuit
  CLI::App* circuit = app.add_subcommand("circuit", "resistor circuit semantics");
  circuit->require_subcommand(1);
  struct {
    std::string input;
  } blackbox_args;
  CLI::App* blackbox_cmd = circuit->add_subcommand(
      "blackbox", "boundary behavior of an open circuit");
  blackbox_cmd->add_option("input", blackbox_args.input)->required();
  struct {
    std::string resistance = "1";
  } relation_args;
  CLI::App* relation_cmd =
      circuit->add_subcommand("relation", "behavior of a single resistor");
  relation_cmd->add_option("--resistor", relation_args.resistance)->required();

  // petri
  CLI::App* petri = app.add_subcommand("petri", "Petri-net semantics");
  petri->require_subcommand(1);
  struct {
    std::string input;
  } tocmc_args;
  CLI::App* tocmc_cmd = petri->add_subcommand(
      "to-cmc", "presentation of the free commutative monoidal category");
  tocmc_cmd->add_option("input", tocmc_args.input)->required();
  struct {
    std::string input, from, to;
    std::size_t max_steps = 10;
  } reach_args;
  CLI::App* reach_cmd =
      petri->add_subcommand("reachable", "bounded reachability between markings");
  reach_cmd->add_option("input", reach_args.input)->required();
  reach_cmd->add_option("--from", reach_args.from, "marking, e.g. \"H:4,O:2\"")
      ->required();
  reach_cmd->add_option("--to", reach_args.to)->required();
  reach_cmd->add_option("--max-steps", reach_args.max_steps);

  // dynamics
  CLI::App* dynamics = app.add_subcommand("dynamics", "mass-action semantics");
  dynamics->require_subcommand(1);
  struct {
    std::string input, at;
  } eval_args;
  CLI::App* eval_cmd =
      dynamics->add_subcommand("eval", "mass-action vector field at a state");
  eval_cmd->add_option("input", eval_args.input)->required();
  eval_cmd->add_option("--at", eval_args.at, "state, e.g. \"H:1,O:1,H2O:0\"")
      ->required();
  struct {
    std::string input, at;
  } steady_args;
  CLI::App* steady_cmd =
      dynamics->add_subcommand("steady", "test whether a state is steady");
  steady_cmd->add_option("input", steady_args.input)->required();
  steady_cmd->add_option("--at", steady_args.at)->required();
  struct {
    std::string input, at, step = "1";
    std::size_t steps = 1;
  } euler_args;
  CLI::App* euler_cmd =
      dynamics->add_subcommand("euler", "explicit Euler trajectory");
  // The step flag is spelled --h, so the help flag must drop its short form.
  euler_cmd->set_help_flag("--help", "print help");
  euler_cmd->add_option("input", euler_args.input)->required();
  euler_cmd->add_option("--at", euler_args.at)->required();
  euler_cmd->add_option("--h", euler_args.step, "step size (rational)");
  euler_cmd->add_option("--steps", euler_args.steps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (compose_cmd->parsed() || tensor_cmd->parsed()) {
    const BinaryArgs& args = compose_cmd->parsed() ? compose_args : tensor_args;
    DocumentPtr a, b;
    if (int rc = load(args.first, a)) return rc;
    if (int rc = load(args.second, b)) return rc;
    ocs_document* raw = nullptr;
    ocs_status status = compose_cmd->parsed()
                            ? ocs_compose(a.get(), b.get(), &raw)
                            : ocs_tensor(a.get(), b.get(), &raw);
    if (status != OCS_OK) return fail(status);
    DocumentPtr result(raw);
    return emit_document(result.get(), args.output, args.canonical);
  }

  if (iso_cmd->parsed()) {
    DocumentPtr a, b;
    if (int rc = load(iso_args.first, a)) return rc;
    if (int rc = load(iso_args.second, b)) return rc;
    int isomorphic = 0;
    char* raw = nullptr;
    ocs_status status = ocs_isomorphic(a.get(), b.get(), &isomorphic, &raw);
    if (status != OCS_OK) return fail(status);
    StringPtr witness(raw);
    if (isomorphic) {
      std::fputs(witness.get(), stdout);
      return kOk;
    }
    std::puts("not isomorphic");
    return kDomainError;
  }

  if (id_cmd->parsed()) {
    ocs_document* raw = nullptr;
    ocs_status status =
        ocs_identity_document(id_args.instance.c_str(), id_args.size, &raw);
    if (status != OCS_OK) return fail(status);
    DocumentPtr doc(raw);
    return emit_document(doc.get(), id_args.output, false);
  }

  if (dot_cmd->parsed()) {
    DocumentPtr doc;
    if (int rc = load(dot_args.input, doc)) return rc;
    char* raw = nullptr;
    ocs_status status = ocs_export_dot(doc.get(), &raw);
    if (status != OCS_OK) return fail(status);
    StringPtr text(raw);
    if (dot_args.output.empty()) {
      std::fputs(text.get(), stdout);
    } else {
      std::FILE* f = std::fopen(dot_args.output.c_str(), "wb");
      if (!f) {
        std::fprintf(stderr, "cannot open '%s'\n", dot_args.output.c_str());
        return kDomainError;
      }
      std::fputs(text.get(), f);
      std::fclose(f);
    }
    return kOk;
  }

  if (frob_check->parsed()) {
    char* raw = nullptr;
    int all_hold = 0;
    ocs_status status = ocs_frobenius_report(frob_args.instance.c_str(),
                                             frob_args.size, &raw, &all_hold);
    if (status != OCS_OK) return fail(status);
    StringPtr report(raw);
    std::fputs(report.get(), stdout);
    return all_hold ? kOk : kDomainError;
  }

  if (blackbox_cmd->parsed()) {
    DocumentPtr doc;
    if (int rc = load(blackbox_args.input, doc)) return rc;
    char* raw = nullptr;
    ocs_status status = ocs_circuit_blackbox(doc.get(), &raw);
    if (status != OCS_OK) return fail(status);
    StringPtr text(raw);
    std::fputs(text.get(), stdout);
    return kOk;
  }

  if (relation_cmd->parsed()) {
    char* raw = nullptr;
    ocs_status status =
        ocs_resistor_relation(relation_args.resistance.c_str(), &raw);
    if (status != OCS_OK) return fail(status);
    StringPtr text(raw);
    std::fputs(text.get(), stdout);
    return kOk;
  }

  if (tocmc_cmd->parsed()) {
    DocumentPtr doc;
    if (int rc = load(tocmc_args.input, doc)) return rc;
    char* raw = nullptr;
    ocs_status status = ocs_petri_to_cmc(doc.get(), &raw);
    if (status != OCS_OK) return fail(status);
    StringPtr text(raw);
    std::fputs(text.get(), stdout);
    return kOk;
  }

  if (reach_cmd->parsed()) {
    DocumentPtr doc;
    if (int rc = load(reach_args.input, doc)) return rc;
    int reachable = 0;
    char* raw = nullptr;
    ocs_status status =
        ocs_petri_reachable(doc.get(), reach_args.from.c_str(),
                            reach_args.to.c_str(), reach_args.max_steps,
                            &reachable, &raw);
    if (status != OCS_OK) return fail(status);
    StringPtr witness(raw);
    if (reachable) {
      std::printf("reachable: %s\n", witness.get());
      return kOk;
    }
    std::printf("unreachable within %zu steps\n", reach_args.max_steps);
    return kDomainError;
  }

  if (eval_cmd->parsed()) {
    DocumentPtr doc;
    if (int rc = load(eval_args.input, doc)) return rc;
    char* raw = nullptr;
    ocs_status status =
        ocs_dynamics_eval(doc.get(), eval_args.at.c_str(), &raw);
    if (status != OCS_OK) return fail(status);
    StringPtr text(raw);
    std::printf("%s\n", text.get());
    return kOk;
  }

  if (steady_cmd->parsed()) {
    DocumentPtr doc;
    if (int rc = load(steady_args.input, doc)) return rc;
    int steady = 0;
    ocs_status status =
        ocs_dynamics_steady(doc.get(), steady_args.at.c_str(), &steady);
    if (status != OCS_OK) return fail(status);
    std::puts(steady ? "steady" : "not steady");
    return steady ? kOk : kDomainError;
  }

  if (euler_cmd->parsed()) {
    DocumentPtr doc;
    if (int rc = load(euler_args.input, doc)) return rc;
    char* raw = nullptr;
    ocs_status status =
        ocs_dynamics_euler(doc.get(), euler_args.at.c_str(),
                           euler_args.step.c_str(), euler_args.steps, &raw);
    if (status != OCS_OK) return fail(status);
    StringPtr text(raw);
    std::fputs(text.get(), stdout);
    return kOk;
  }

  return 2;
}
