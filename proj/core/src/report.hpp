#pragma once

// JSON reports shared by the command dispatcher and campaigns. Private to gon_io.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gon/bhw.hpp"
#include "gon/campaign.hpp"
#include "gon/instance_io.hpp"
#include "gon/slicing.hpp"
#include "gon/translation.hpp"
#include "json.hpp"

namespace gon::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const QVector& v);
Json to_json(const ZVector& v);
Json to_json(const QMatrix& m);
Json to_json(const LambdaSq& l);
Json to_json(const MinimaProfile& m);
Json to_json(const BhwReport& r);
Json to_json(const ViaStrongReport& r);
Json to_json(const TranslationResult& r);
Json to_json(const TranslationReport& r);
Json to_json(const LevelTrace& t);
Json to_json(const StrongReport& r);

struct Outcome {
  Status status = Status::pass;
  Json report;
};

Outcome run_count(const Instance& inst);
Outcome run_minima(const Instance& inst);
Outcome run_qvalues(const Instance& inst);
Outcome run_verify_bhw(const Instance& inst, bool via_strong);
Outcome run_translate(const Instance& inst, const std::vector<Rational>& t_samples);
Outcome run_verify_strong(const Instance& inst);
Outcome run_oracle_diff(const Instance& inst, std::uint64_t capacity);

// Runs `body`, turning library exceptions into a status and an "error" report.
Outcome guarded(const std::function<Outcome()>& body);

// Indented "key: value" listing of a report.
std::string render_text(const Json& report);

}  // namespace gon::io
