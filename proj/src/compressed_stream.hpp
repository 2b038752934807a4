#pragma once

// Internal: decompressing input streams for the dump reader.

#include "kgfca/error.hpp"

#include <zlib.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <streambuf>
#include <vector>

namespace kgfca::detail {

// gzip/zlib inflater over a file. Throws ParseError on corrupt or truncated
// input, including a missing stream trailer at EOF.
class GzipStreambuf : public std::streambuf {
public:
    explicit GzipStreambuf(const std::filesystem::path& path)
        : file_(path, std::ios::binary), path_(path.string()) {
        if (!file_) throw ParseError("cannot open dump file: " + path_);
        zstream_.zalloc = Z_NULL;
        zstream_.zfree = Z_NULL;
        zstream_.opaque = Z_NULL;
        // 15 + 16: gzip wrapper
        if (inflateInit2(&zstream_, 15 + 16) != Z_OK)
            throw ParseError("zlib initialisation failed for: " + path_);
        initialized_ = true;
    }

    ~GzipStreambuf() override {
        if (initialized_) inflateEnd(&zstream_);
    }

protected:
    int_type underflow() override {
        if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
        if (stream_done_) return traits_type::eof();

        zstream_.next_out = reinterpret_cast<Bytef*>(out_.data());
        zstream_.avail_out = static_cast<uInt>(out_.size());
        while (zstream_.avail_out == out_.size()) {
            if (zstream_.avail_in == 0 && !input_done_) {
                file_.read(in_.data(), static_cast<std::streamsize>(in_.size()));
                std::streamsize got = file_.gcount();
                if (got <= 0) input_done_ = true;
                zstream_.next_in = reinterpret_cast<Bytef*>(in_.data());
                zstream_.avail_in = static_cast<uInt>(got > 0 ? got : 0);
            }
            int rc = inflate(&zstream_, input_done_ ? Z_FINISH : Z_NO_FLUSH);
            if (rc == Z_STREAM_END) {
                stream_done_ = true;
                break;
            }
            if (rc == Z_BUF_ERROR && input_done_)
                throw ParseError("truncated gzip stream: " + path_);
            if (rc != Z_OK && rc != Z_BUF_ERROR)
                throw ParseError("corrupt gzip stream: " + path_);
            if (input_done_ && zstream_.avail_in == 0 && !stream_done_ && rc == Z_OK &&
                zstream_.avail_out == out_.size())
                throw ParseError("truncated gzip stream: " + path_);
        }
        std::size_t produced = out_.size() - zstream_.avail_out;
        if (produced == 0) {
            if (!stream_done_) throw ParseError("truncated gzip stream: " + path_);
            return traits_type::eof();
        }
        setg(out_.data(), out_.data(), out_.data() + produced);
        return traits_type::to_int_type(*gptr());
    }

private:
    std::ifstream file_;
    std::string path_;
    z_stream zstream_{};
    bool initialized_ = false;
    bool input_done_ = false;
    bool stream_done_ = false;
    std::array<char, 1 << 16> in_{};
    std::array<char, 1 << 16> out_{};
};

// Reads the output of an external filter command (used for bzip2, which has
// no system library here). A nonzero exit status surfaces as a ParseError at
// end of stream.
class PipeStreambuf : public std::streambuf {
public:
    explicit PipeStreambuf(const std::string& command, std::string description)
        : description_(std::move(description)) {
        pipe_ = popen(command.c_str(), "r");
        if (!pipe_) throw ParseError("cannot run decompression filter: " + description_);
    }

    ~PipeStreambuf() override {
        if (pipe_) pclose(pipe_);
    }

protected:
    int_type underflow() override {
        if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
        if (!pipe_) return traits_type::eof();
        std::size_t got = fread(buf_.data(), 1, buf_.size(), pipe_);
        if (got == 0) {
            int status = pclose(pipe_);
            pipe_ = nullptr;
            if (status != 0)
                throw ParseError("decompression filter failed (truncated or corrupt input): " +
                                 description_);
            return traits_type::eof();
        }
        setg(buf_.data(), buf_.data(), buf_.data() + got);
        return traits_type::to_int_type(*gptr());
    }

private:
    FILE* pipe_ = nullptr;
    std::string description_;
    std::array<char, 1 << 16> buf_{};
};

// istream owning one of the buffers above.
class FilterIStream : public std::istream {
public:
    explicit FilterIStream(std::unique_ptr<std::streambuf> buf)
        : std::istream(buf.get()), buf_(std::move(buf)) {
        exceptions(std::ios::badbit);
    }

private:
    std::unique_ptr<std::streambuf> buf_;
};

std::unique_ptr<std::istream> open_input_stream(const std::filesystem::path& path);

} // namespace kgfca::detail
