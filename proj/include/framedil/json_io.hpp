#ifndef FRAMEDIL_JSON_IO_HPP
#define FRAMEDIL_JSON_IO_HPP

#include <json.hpp>

#include "framedil/dilation.hpp"
#include "framedil/frame.hpp"
#include "framedil/gabor.hpp"
#include "framedil/group.hpp"
#include "framedil/projective.hpp"
#include "framedil/report.hpp"
#include "framedil/wavelet.hpp"

namespace framedil {

using Json = nlohmann::json;

// Matrix files are the bit-exact contract shared by every tool:
//   {"rows": r, "cols": c, "data": [[re, im], ...]}   (row-major)
// Vectors are bare arrays of [re, im] pairs.

Json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const Json &j);

Json cvec_to_json(const CVec &v);
CVec cvec_from_json(const Json &j);

Json frame_to_json(const Frame &f);
Frame frame_from_json(const Json &j);

Json bounds_to_json(const FrameBounds &b);
FrameBounds bounds_from_json(const Json &j);

Json group_to_json(const FiniteGroup &g);
FiniteGroup group_from_json(const Json &j); // validates the table

Json representation_to_json(const Representation &rep);
Representation representation_from_json(const Json &j);

Json multiplier_to_json(const MultiplierTable &m);
MultiplierTable multiplier_from_json(const Json &j);

Json projective_rep_to_json(const ProjectiveRep &rep);
ProjectiveRep projective_rep_from_json(const Json &j);

Json gabor_to_json(const FiniteGaborSystem &sys);
FiniteGaborSystem gabor_from_json(const Json &j);

Json bs_rep_to_json(const BSRepresentation &rep);
BSRepresentation bs_rep_from_json(const Json &j); // validates the relation

/// {"dim", "D", "T", "psi"} plus an optional "index_set": [[j, k], ...]
/// restricting the enumerated operators (the full rectangle is the default).
Json affine_system_to_json(const AffineSystem &sys);
AffineSystem affine_system_from_json(const Json &j);

Json dilation_certificate_to_json(const DilationCertificate &c);
DilationCertificate dilation_certificate_from_json(const Json &j);

Json group_certificate_to_json(const GroupDilationCertificate &c);
GroupDilationCertificate group_certificate_from_json(const Json &j);

Json projective_certificate_to_json(const ProjectiveDilationCertificate &c,
                                    const char *kind = "projective");
ProjectiveDilationCertificate projective_certificate_from_json(const Json &j);

Json wavelet_result_to_json(const WaveletDilationResult &r);
WaveletDilationResult wavelet_result_from_json(const Json &j);

Json report_to_json(const Report &r);

/// Kind tag stored in a certificate file ("plain", "group", "projective",
/// "gabor", "wavelet"). Throws ParseError when absent.
std::string certificate_kind(const Json &j);

std::string dump_json(const Json &j);
Json parse_json(const std::string &text); // ParseError on malformed input

} // namespace framedil

#endif
