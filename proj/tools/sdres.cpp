#include <CLI11.hpp>

#include <sdres/io.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string& path)
{
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

sdres::EngineOptions engine_options(int trials, std::uint64_t seed, bool multihomog)
{
  sdres::EngineOptions opts;
  opts.trials = trials;
  opts.seed = seed;
  opts.multihomog = multihomog;
  return opts;
}

std::vector<long> parse_long_list(const std::string& s)
{
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stol(item));
  return out;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"sparse difference resultants over Q"};
  app.require_subcommand(1);

  std::string input = "-";
  bool json = false;
  std::uint64_t seed = 7;
  int trials = 5;
  bool multihomog = true;
  std::string engine = "ansatz";
  std::string cert_path;
  std::string orders_arg, degrees_arg;

  auto add_common = [&](CLI::App* sub, bool takes_input = true) {
    if (takes_input)
      sub->add_option("input", input, "system file, or - for stdin");
    sub->add_flag("--json", json, "JSON output");
    sub->add_option("--seed", seed, "random seed for probabilistic modes");
    return sub;
  };

  auto* essential = add_common(app.add_subcommand("essential", "transformal essentiality check"));
  auto* super = add_common(app.add_subcommand("super-essential", "unique super-essential subset"));
  auto* jacobi = add_common(app.add_subcommand("jacobi", "Jacobi numbers J_i"));
  auto* bounds = add_common(app.add_subcommand("bounds", "order/effective-order bound report"));
  auto* resultant = add_common(app.add_subcommand("resultant", "sparse difference resultant"));
  resultant->add_option("--engine", engine, "ansatz | reduction")
      ->check(CLI::IsMember({"ansatz", "reduction"}));
  resultant->add_flag("--multihomog,!--no-multihomog", multihomog,
                      "layer-profile ansatz pruning (default on)");
  resultant->add_option("--trials", trials, "verification trials");
  auto* verify = add_common(app.add_subcommand("verify", "verify a stored certificate"));
  verify->add_option("--cert", cert_path, "certificate polynomial file")->required();
  verify->add_option("--trials", trials, "verification trials");
  auto* dense = add_common(app.add_subcommand("dense-resultant", "dense difference resultant"), false);
  dense->add_option("--orders", orders_arg, "comma-separated s_0,...,s_n")->required();
  dense->add_option("--degrees", degrees_arg, "comma-separated m_0,...,m_n")->required();
  dense->add_option("--trials", trials, "verification trials");
  auto* mixvol = add_common(app.add_subcommand("mixed-volume", "mixed volume of the supports"));

  CLI11_PARSE(app, argc, argv);

  try {
    if (essential->parsed()) {
      sdres::GenericSystem sys = sdres::parse_system(read_input(input));
      bool ok = sdres::is_laurent_transformally_essential(sys);
      if (json)
        std::cout << (ok ? "{\"essential\":true}" : "{\"essential\":false}") << "\n";
      else
        std::cout << (ok ? "essential" : "not essential") << "\n";
      return ok ? 0 : 3;
    }
    if (super->parsed()) {
      sdres::GenericSystem sys = sdres::parse_system(read_input(input));
      auto t = sdres::super_essential_subset(sys);
      if (json) {
        std::cout << "{\"super_essential\":[";
        for (std::size_t i = 0; i < t.size(); ++i)
          std::cout << (i ? "," : "") << t[i];
        std::cout << "]}\n";
      } else {
        std::cout << "super-essential:";
        for (int i : t)
          std::cout << " " << i;
        std::cout << "\n";
      }
      return 0;
    }
    if (jacobi->parsed()) {
      sdres::GenericSystem sys = sdres::parse_system(read_input(input));
      auto a = sdres::order_matrix(sys);
      if (json)
        std::cout << "{\"jacobi\":[";
      else
        std::cout << "jacobi:";
      for (int i = 0; i < sys.poly_count(); ++i) {
        sdres::ExtInt j = sdres::jacobi_number(sdres::delete_row(a, i));
        if (json)
          std::cout << (i ? "," : "") << (j.finite() ? std::to_string(j.value()) : "null");
        else
          std::cout << " " << j.str();
      }
      std::cout << (json ? "]}\n" : "\n");
      return 0;
    }
    if (bounds->parsed()) {
      sdres::GenericSystem sys = sdres::parse_system(read_input(input));
      auto rep = sdres::search_bounds(sys);
      std::cout << (json ? sdres::bounds_to_json(rep) + "\n" : sdres::bounds_to_text(rep));
      return 0;
    }
    if (resultant->parsed()) {
      sdres::SystemDocument doc = sdres::parse_document(read_input(input));
      if (!doc.system)
        throw sdres::ParseError(1, 1, "document is not a generic coefficient system");
      // document options are defaults; explicit flags win
      if (resultant->count("--engine") == 0 && doc.options.count("engine"))
        engine = doc.options.at("engine");
      if (resultant->count("--trials") == 0 && doc.options.count("trials"))
        trials = std::stoi(doc.options.at("trials"));
      if (engine != "ansatz" && engine != "reduction")
        throw sdres::ParseError(1, 1, "unknown engine option " + engine);
      auto opts = engine_options(trials, seed, multihomog);
      sdres::ResultantCertificate cert = engine == "reduction"
                                             ? sdres::resultant_via_reduction(*doc.system, opts)
                                             : sdres::search_resultant(*doc.system, opts);
      std::cout << (json ? sdres::certificate_to_json(cert, doc.system->table()) + "\n"
                         : sdres::certificate_to_text(cert, doc.system->table()));
      return 0;
    }
    if (verify->parsed()) {
      sdres::GenericSystem sys = sdres::parse_system(read_input(input));
      std::string cert_text = read_input(cert_path);
      // accept either the bare polynomial or the first line of a stored
      // text certificate
      std::string first_line = cert_text.substr(0, cert_text.find('\n'));
      sdres::ResultantCertificate cert;
      cert.sr = sdres::parse_poly(first_line, sys.table());
      cert.degree = cert.sr.total_degree();
      for (int i = 0; i < sys.poly_count(); ++i) {
        sdres::ExtInt ord = sdres::ExtInt::neg_inf();
        for (int k = 0; k < sys.block_size(i); ++k)
          ord = sdres::ext_max(ord, sdres::order_stats(cert.sr, sys.table().coeff_var(i, k)).ord);
        cert.orders.push_back(ord);
      }
      auto rec = sdres::verify_certificate(cert, sys, trials, seed);
      bool ok = rec.vanishing_ok && rec.homogeneity_ok;
      if (json) {
        std::cout << "{\"vanishing\":" << (rec.vanishing_ok ? "true" : "false")
                  << ",\"homogeneity\":" << (rec.homogeneity_ok ? "true" : "false")
                  << ",\"trials\":" << rec.trials << "}\n";
      } else {
        std::cout << "vanishing: " << (rec.vanishing_ok ? "ok" : "FAIL") << "\n"
                  << "homogeneity: " << (rec.homogeneity_ok ? "ok" : "FAIL") << "\n";
      }
      return ok ? 0 : 5;
    }
    if (dense->parsed()) {
      auto orders = parse_long_list(orders_arg);
      auto degrees = parse_long_list(degrees_arg);
      if (orders.size() != degrees.size() || orders.size() < 2)
        throw CLI::ValidationError("--orders and --degrees need matching n+1 entries");
      auto opts = engine_options(trials, seed, true);
      auto rep = sdres::dense_resultant(static_cast<int>(orders.size()) - 1, orders, degrees, opts);
      std::cout << (json ? sdres::dense_report_to_json(rep) + "\n" : sdres::dense_report_to_text(rep));
      return 0;
    }
    if (mixvol->parsed()) {
      sdres::SystemDocument doc = sdres::parse_document(read_input(input));
      // supports of the norm forms as lattice polytopes over the occurring
      // shifted main variables
      std::set<sdres::SVar> coords;
      std::vector<sdres::DiffPoly> norms;
      for (const auto& p : doc.polys) {
        sdres::NormForm nf = sdres::norm_form(p, *doc.table);
        for (const auto& v : nf.poly.variables()) {
          if (!doc.table->is_main(v.var))
            throw std::invalid_argument("mixed-volume input must use main variables only");
          coords.insert(v);
        }
        norms.push_back(nf.poly);
      }
      std::vector<sdres::SVar> coord_list(coords.begin(), coords.end());
      if (norms.size() != coord_list.size())
        throw std::invalid_argument("mixed volume needs as many polynomials as variables");
      std::vector<sdres::Polytope> qs;
      for (const auto& p : norms) {
        std::vector<sdres::Point> pts;
        for (const auto& t : p.terms()) {
          sdres::Point pt;
          for (const auto& v : coord_list)
            pt.push_back(sdres::Rat(t.mon.exponent(v)));
          pts.push_back(std::move(pt));
        }
        qs.push_back(sdres::make_polytope(static_cast<int>(coord_list.size()), std::move(pts)));
      }
      sdres::Int mv = sdres::mixed_volume(qs);
      if (json)
        std::cout << "{\"mixed_volume\":" << mv.get_str() << "}\n";
      else
        std::cout << mv.get_str() << "\n";
      return 0;
    }
  } catch (const sdres::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sdres::NotEssentialError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sdres::BoundsExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const sdres::InternalConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
