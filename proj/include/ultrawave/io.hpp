#pragma once

#include <string>

#include "ultrawave/fractals.hpp"

#include "json.hpp"

namespace ultrawave {

using Json = nlohmann::ordered_json;

Json field_params_to_json(const FieldParams& fp);
FieldParams field_params_from_json(const Json& j);

// {"cyclotomic":["a/b",...],"p":p} always on output; {"re":x,"im":y} accepted
// on input when it is exactly representable (im must be 0).
Json cyclo_to_json(const Cyclo& c);
Cyclo cyclo_from_json(int p, const Json& j);

Json realv_to_json(const RealV& v);
RealV realv_from_json(const Json& j);

Json step_to_json(const StepFunction& f);
StepFunction step_from_json(const Json& j);

Json profile_to_json(const RadialProfile& f);
RadialProfile profile_from_json(const Json& j);

Json packet_to_json(const WaveletPacket& w);

std::string gram_to_csv(const GramResult& g, unsigned long N, unsigned long K);
std::string fractal_ft_to_csv(const FractalFTReport& rep);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ultrawave
