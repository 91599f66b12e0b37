// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/ppm.hpp"

#include "colortiger/error.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

namespace colortiger {

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw Error(ErrorCode::ParseError, "PPM: " + what);
}

void skip_space_and_comments(std::istream& in)
{
    for (;;) {
        const int c = in.peek();
        if (c == '#') {
            in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
        } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            in.get();
        } else {
            return;
        }
    }
}

std::size_t read_header_number(std::istream& in, const char* what)
{
    skip_space_and_comments(in);
    std::size_t value = 0;
    bool any = false;
    while (in.peek() >= '0' && in.peek() <= '9') {
        value = value * 10 + static_cast<std::size_t>(in.get() - '0');
        if (value > (std::size_t{1} << 32))
            bad(std::string(what) + " is too large");
        any = true;
    }
    if (!any)
        bad(std::string("expected ") + what);
    return value;
}

} // namespace

RawImage read_ppm(std::istream& in)
{
    char magic[2] = {};
    if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '6')
        bad("not a binary P6 pixmap");

    RawImage img;
    img.width = read_header_number(in, "width");
    img.height = read_header_number(in, "height");
    const std::size_t maxval = read_header_number(in, "maxval");
    if (img.width == 0 || img.height == 0)
        bad("zero image dimension");
    if (maxval == 0 || maxval > 65535)
        bad("maxval must lie in [1, 65535]");
    img.maxval = static_cast<std::uint16_t>(maxval);

    // Exactly one whitespace byte separates the header from the raster.
    const int sep = in.get();
    if (sep != ' ' && sep != '\t' && sep != '\n' && sep != '\r')
        bad("missing whitespace after maxval");

    const std::size_t count = img.width * img.height * 3;
    const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
    std::vector<unsigned char> raw(count * bytes_per_sample);
    if (!in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size())))
        bad("truncated raster");

    img.samples.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint16_t v = bytes_per_sample == 2
                                    ? static_cast<std::uint16_t>((raw[2 * i] << 8) | raw[2 * i + 1])
                                    : raw[i];
        if (v > maxval)
            bad("sample exceeds maxval");
        img.samples[i] = v;
    }
    return img;
}

RawImage read_ppm(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open image " + path.string());
    try {
        return read_ppm(in);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

void write_ppm(std::ostream& out, const RawImage& img)
{
    if (img.samples.size() != img.width * img.height * 3)
        throw Error(ErrorCode::LengthMismatch, "PPM sample count does not match dimensions");
    out << "P6\n" << img.width << ' ' << img.height << '\n' << img.maxval << '\n';
    std::vector<unsigned char> raw;
    if (img.maxval > 255) {
        raw.reserve(img.samples.size() * 2);
        for (std::uint16_t v : img.samples) {
            raw.push_back(static_cast<unsigned char>(v >> 8));
            raw.push_back(static_cast<unsigned char>(v & 0xff));
        }
    } else {
        raw.assign(img.samples.begin(), img.samples.end());
    }
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
}

void write_ppm(const std::filesystem::path& path, const RawImage& img)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot write image " + path.string());
    write_ppm(out, img);
    if (!out)
        throw Error(ErrorCode::Io, "failed writing image " + path.string());
}

} // namespace colortiger
