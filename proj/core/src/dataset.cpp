// core/src/dataset.cpp

// Copyright 2026  The crmse authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "crmse/dataset.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "crmse/errors.hpp"
#include "crmse/rng.hpp"

namespace crmse::data {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double energy(const dsp::Waveform& w) {
  double sum = 0.0;
  for (double s : w.samples) sum += s * s;
  return sum;
}

}  // namespace

Utterance mix_at_snr(const dsp::Waveform& clean, const dsp::Waveform& noise,
                     double snr_db, std::string id) {
  if (clean.sample_rate != noise.sample_rate) {
    throw InputError("mix_at_snr: sample rates differ (" +
                     std::to_string(clean.sample_rate) + " vs " +
                     std::to_string(noise.sample_rate) + ")");
  }
  if (noise.samples.size() < clean.samples.size()) {
    throw InputError("mix_at_snr: noise is shorter than the clean signal");
  }

  dsp::Waveform trimmed;
  trimmed.sample_rate = noise.sample_rate;
  trimmed.samples.assign(noise.samples.begin(),
                         noise.samples.begin() +
                             static_cast<std::ptrdiff_t>(clean.samples.size()));

  const double clean_energy = energy(clean);
  const double noise_energy = energy(trimmed);
  if (clean_energy <= 0.0) {
    throw InputError("mix_at_snr: silent clean signal, SNR undefined");
  }
  if (noise_energy <= 0.0) {
    throw InputError("mix_at_snr: silent noise signal, SNR undefined");
  }

  const double gain =
      std::sqrt(clean_energy / (noise_energy * std::pow(10.0, snr_db / 10.0)));

  Utterance utt;
  utt.id = std::move(id);
  utt.clean = clean;
  utt.noise = trimmed;
  for (double& s : utt.noise.samples) s *= gain;
  utt.noisy = clean;
  for (std::size_t i = 0; i < utt.noisy.samples.size(); ++i) {
    utt.noisy.samples[i] += utt.noise.samples[i];
  }
  return utt;
}

std::vector<Utterance> synth_corpus(std::uint64_t seed, int count,
                                    int sample_rate, double duration_seconds) {
  if (count < 1) {
    throw InputError("synth_corpus: count must be >= 1");
  }
  if (sample_rate <= 0 || duration_seconds <= 0.0) {
    throw ConfigError("synth_corpus: sample rate and duration must be positive");
  }

  const std::size_t length =
      static_cast<std::size_t>(std::lround(duration_seconds * sample_rate));
  constexpr double kSnrs[] = {0.0, 5.0, 10.0, 15.0};

  rng::Engine engine(seed);
  std::vector<Utterance> corpus;
  corpus.reserve(static_cast<std::size_t>(count));

  for (int u = 0; u < count; ++u) {
    // Harmonic "speech": partials at multiples of a fundamental aligned to
    // an STFT bin grid (fs/512), amplitudes decaying as 1/m, plus a slow
    // amplitude envelope.
    const int num_partials = 2 + static_cast<int>(rng::below(engine, 3));
    const double f0 =
        static_cast<double>(8 + rng::below(engine, 9)) * sample_rate / 512.0;
    std::vector<double> phase(static_cast<std::size_t>(num_partials));
    for (auto& p : phase) p = rng::uniform(engine, 0.0, kTwoPi);
    const double envelope_hz = rng::uniform(engine, 0.5, 2.0);
    const double envelope_phase = rng::uniform(engine, 0.0, kTwoPi);

    dsp::Waveform clean;
    clean.sample_rate = sample_rate;
    clean.samples.resize(length);
    for (std::size_t n = 0; n < length; ++n) {
      const double t = static_cast<double>(n) / sample_rate;
      const double env =
          0.55 + 0.4 * std::sin(kTwoPi * envelope_hz * t + envelope_phase);
      double s = 0.0;
      for (int m = 1; m <= num_partials; ++m) {
        s += (0.3 / m) *
             std::sin(kTwoPi * m * f0 * t + phase[static_cast<std::size_t>(m - 1)]);
      }
      clean.samples[n] = env * s;
    }

    // Noise: white for even utterances, amplitude-modulated white otherwise.
    dsp::Waveform noise;
    noise.sample_rate = sample_rate;
    noise.samples.resize(length);
    const bool modulated = (u % 2) == 1;
    const double mod_hz = rng::uniform(engine, 1.0, 6.0);
    const double mod_phase = rng::uniform(engine, 0.0, kTwoPi);
    for (std::size_t n = 0; n < length; ++n) {
      double v = 0.1 * rng::normal(engine);
      if (modulated) {
        const double t = static_cast<double>(n) / sample_rate;
        v *= 0.6 + 0.4 * std::sin(kTwoPi * mod_hz * t + mod_phase);
      }
      noise.samples[n] = v;
    }

    const double snr = kSnrs[u % 4];
    std::ostringstream id;
    id << "utt" << u << "_" << (modulated ? "am" : "white") << "_snr"
       << static_cast<int>(snr);
    corpus.push_back(mix_at_snr(clean, noise, snr, id.str()));
  }
  return corpus;
}

std::vector<TrainingExample> make_examples(const Utterance& utt,
                                           const dsp::StftConfig& config,
                                           int context_radius,
                                           double mask_floor) {
  if (context_radius < 0) {
    throw ConfigError("make_examples: context radius must be >= 0");
  }
  if (utt.clean.samples.size() != utt.noisy.samples.size()) {
    throw InputError("make_examples: clean and noisy lengths differ for " + utt.id);
  }
  if (utt.noisy.samples.size() < static_cast<std::size_t>(config.frame_size)) {
    throw InputError("make_examples: utterance " + utt.id +
                     " is shorter than one frame");
  }

  dsp::ComplexSpectrogram noisy_spec = dsp::stft(utt.noisy, config);
  dsp::ComplexSpectrogram clean_spec = dsp::stft(utt.clean, config);

  const double peak = noisy_spec.values.cwiseAbs().maxCoeff();
  if (peak <= 0.0) {
    throw InputError("make_examples: utterance " + utt.id + " is silent");
  }
  noisy_spec.values /= peak;
  clean_spec.values /= peak;

  // The CRM is invariant to the common scaling, so targets computed on the
  // normalized pair equal those of the raw pair; the floor is now relative
  // to a peak of 1.
  const mask::ComplexMask bounded =
      mask::bound_mask(mask::crm(clean_spec, noisy_spec, mask_floor));

  const auto num_frames = noisy_spec.num_frames();
  const auto bins = noisy_spec.num_bins();
  const int window = 2 * context_radius + 1;

  std::vector<TrainingExample> examples;
  examples.reserve(static_cast<std::size_t>(num_frames));
  for (Eigen::Index n = 0; n < num_frames; ++n) {
    TrainingExample ex;
    ex.utterance_id = utt.id;
    ex.frame_index = static_cast<int>(n);
    ex.context = Eigen::MatrixXcd::Zero(window, bins);
    for (int t = 0; t < window; ++t) {
      const Eigen::Index frame = n - context_radius + t;
      if (frame >= 0 && frame < num_frames) {
        ex.context.row(t) = noisy_spec.values.row(frame);
      }
    }
    ex.target = bounded.values.row(n).transpose();
    examples.push_back(std::move(ex));
  }
  return examples;
}

void write_manifest(const std::vector<ManifestEntry>& entries,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw IoError("manifest: cannot open for writing (" + path.string() + ")");
  }
  const std::filesystem::path base = path.parent_path();
  auto relativize = [&base](const std::filesystem::path& p) {
    const auto rel = p.lexically_proximate(base);
    return rel.empty() ? p : rel;
  };

  out << "# id\tclean\tprocessed\tsnr_db\n";
  for (const auto& e : entries) {
    out << e.id << '\t' << relativize(e.clean).generic_string() << '\t'
        << relativize(e.processed).generic_string();
    if (e.snr_db) out << '\t' << *e.snr_db;
    out << '\n';
  }
  if (!out) {
    throw IoError("manifest: write failed (" + path.string() + ")");
  }
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("manifest: cannot open (" + path.string() + ")");
  }
  const std::filesystem::path base = path.parent_path();
  auto resolve = [&base](const std::string& p) {
    const std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : base / fp;
  };

  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream row(line);
    while (std::getline(row, field, '\t')) fields.push_back(field);
    if (fields.size() < 3 || fields.size() > 4) {
      throw IoError("manifest: line " + std::to_string(line_no) + " of " +
                    path.string() + " has " + std::to_string(fields.size()) +
                    " fields, expected 3 or 4");
    }
    ManifestEntry e;
    e.id = fields[0];
    e.clean = resolve(fields[1]);
    e.processed = resolve(fields[2]);
    if (fields.size() == 4) e.snr_db = std::stod(fields[3]);
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace crmse::data
