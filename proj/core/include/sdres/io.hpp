#ifndef SDRES_IO_HPP
#define SDRES_IO_HPP

#include <sdres/algebraic.hpp>
#include <sdres/engine.hpp>
#include <sdres/errors.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sdres {

struct SystemDocument {
  int version = 1;
  std::vector<std::string> declared_main;
  std::map<std::string, std::string> options;
  std::shared_ptr<VarTable> table;
  std::vector<DiffPoly> polys;
  std::optional<GenericSystem> system;  // present when the generic shape validates
};

// polynomial-list document; coefficient vars are u<i><k> (single digits)
// or u<i>_<k>; everything else is a main variable
SystemDocument parse_document(const std::string& text);

// document that must carry a well-formed generic system
GenericSystem parse_system(const std::string& text);

std::string print_system(const GenericSystem& sys);

// polynomial over an existing table (used for certificates)
DiffPoly parse_poly(const std::string& text, const VarTable& table);

std::string poly_to_text(const DiffPoly& p, const VarTable& table);

std::string certificate_to_text(const ResultantCertificate& cert, const VarTable& table);
std::string certificate_to_json(const ResultantCertificate& cert, const VarTable& table);

std::string bounds_to_text(const BoundReport& rep);
std::string bounds_to_json(const BoundReport& rep);

std::string dense_report_to_text(const DenseResultantReport& rep);
std::string dense_report_to_json(const DenseResultantReport& rep);

}  // namespace sdres

#endif
