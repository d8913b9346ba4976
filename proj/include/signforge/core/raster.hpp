// Copyright (c) signforge contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace signforge {

/// Dense row-major raster with interleaved channels.
template <typename T>
struct Raster {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<T> data;

    Raster() = default;
    Raster(int w, int h, int c, T fill = T{})
        : width(w), height(h), channels(c),
          data(static_cast<std::size_t>(w) * h * c, fill) {}

    std::size_t index(int x, int y, int c = 0) const {
        return (static_cast<std::size_t>(y) * width + x) * channels + c;
    }
    T& at(int x, int y, int c = 0) { return data[index(x, y, c)]; }
    const T& at(int x, int y, int c = 0) const { return data[index(x, y, c)]; }

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
    bool empty() const { return data.empty(); }
    bool same_shape(const Raster& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }

    bool operator==(const Raster& o) const {
        return width == o.width && height == o.height && channels == o.channels && data == o.data;
    }
};

using RasterF = Raster<float>;
using RasterU8 = Raster<std::uint8_t>;
using RasterI32 = Raster<std::int32_t>;

// sRGB opto-electronic transfer and its inverse (IEC 61966-2-1).
inline float srgb_to_linear(float v) {
    return v <= 0.04045f ? v / 12.92f : std::pow((v + 0.055f) / 1.055f, 2.4f);
}
inline float linear_to_srgb(float v) {
    if (v <= 0.0f) return 0.0f;
    if (v <= 0.0031308f) return 12.92f * v;
    return 1.055f * std::pow(v, 1.0f / 2.4f) - 0.055f;
}

/// Round-half-up quantization of [0,1] to a byte.
inline std::uint8_t quantize8(float v) {
    float s = v * 255.0f + 0.5f;
    if (s < 0.0f) s = 0.0f;
    if (s > 255.0f) s = 255.0f;
    return static_cast<std::uint8_t>(s);
}

inline float luminance(float r, float g, float b) {
    return 0.2126f * r + 0.7152f * g + 0.0722f * b;
}

/// Byte sRGB (any channel count; alpha passed through linearly-scaled) to
/// linear float.
RasterF decode_srgb(const RasterU8& in);
/// Area-average downscale/upscale used by the reference classifier.
RasterF resize_box(const RasterF& in, int out_w, int out_h);

}  // namespace signforge
